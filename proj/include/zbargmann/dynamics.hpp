#pragma once

// Unitary evolution rho(t) = exp(iHt) rho0 exp(-iHt) in the 2d-dimensional
// full universe, and the probability current
//
//   J(t) = d/dt Tr[Pi(z) rho(t)] = i Tr([Pi(z), H] rho(t))
//
// flowing between the embedded open system and its complement.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zbargmann/bargmann.hpp"
#include "zbargmann/grothendieck.hpp"

namespace zbargmann {

inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kCurrentResidueTolerance = 1e-9;

class DensityMatrix {
 public:
  // Hermitian, trace one and positive semidefinite, each to kDensityTolerance.
  static DensityMatrix from(ComplexMatrix rho);
  static DensityMatrix pure(const Ket& f);

  const ComplexMatrix& matrix() const noexcept { return rho_; }
  std::size_t dim() const noexcept { return rho_.rows(); }

  // Tr(rho^2) = 1 to tolerance.
  bool is_pure(double tolerance = 1e-10) const;

 private:
  explicit DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {}
  ComplexMatrix rho_;
};

DensityMatrix evolve(const DensityMatrix& rho0, const HermitianMatrix& h, double t);

// J(t) for an arbitrary time-independent projector (Pi(z), or the identity for
// the isolated limit).
double current_with_projector(const DensityMatrix& rho0, const HermitianMatrix& h, const ComplexMatrix& projector,
                              double t);
double current(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp, double t);

// J(t) ~ c0 + c1 t + c2 t^2 + ...; coefficients are J^(k)(0) / k!.
struct TaylorCurrent {
  std::vector<double> coefficients;
  UnitCirclePoint z;

  double evaluate(double t) const;
};

TaylorCurrent current_derivatives_at_zero(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp,
                                          int order = 2);
double taylor_current_eval(const TaylorCurrent& tc, double t);

struct CurrentSeries {
  std::vector<double> times;
  std::vector<double> j_values;
  std::vector<double> occupancy;  // Tr[Pi(z) rho(t)]
  std::optional<std::vector<double>> q_values;
  UnitCirclePoint z;

  std::size_t sign_changes() const;
};

// start, start + step, ..., up to end inclusive (with a half-step guard).
std::vector<double> time_grid(double start, double end, double step);

CurrentSeries current_series(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp,
                             std::span<const double> times);

// Occupancy in [-1e-9, 1 + 1e-9], and at interior points the central
// difference of occupancy matches J to the Taylor remainder bound of the
// central difference. Throws InvariantViolation with the worst residual.
void validate_series(const CurrentSeries& series, const HermitianMatrix& h, const ProjectorPair& pp);

// g[rho(t)] for the Q(t) computation.
struct GValue {
  double value = 0.0;
  bool exact = false;
};
using GSupplier = std::function<GValue(const DensityMatrix&)>;

// ||rho||_1 = (sum|v_r|)^2 for a pure state; throws for mixed input.
GSupplier pure_state_g();
// Optimizer lower bound with a fixed seed (Q is then an upper bound on the true Q).
GSupplier optimizer_g(const AscentOptions& options);

struct QSample {
  double q = 0.0;
  double q_times_g = 0.0;  // 2 |Tr[Pi(z) rho(t)]|
  double g = 0.0;
  bool g_exact = false;
};

QSample q_of_t(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp, double t,
               const GSupplier& g_supplier);

// Q with theta = rho0, V = W = exp(-iHt): the isolated-system value, constant in t.
double isolated_q(const DensityMatrix& rho0, const HermitianMatrix& h, double t, double g_value);

// Checks N(Pi(z) V) <= 1 and N(Pi(-z) V) <= 1 for unitary V, together with
// the diagonal identity [Pi V V^dagger Pi]_ii = 1/2. Throws InputError for a
// non-unitary V and InvariantViolation if a check fails.
bool projected_unitary_is_rescaling(const ComplexMatrix& v, const ProjectorPair& pp);

struct OpenVsIsolated {
  double q = 0.0;        // theta, V, W in the d-dimensional system
  double q_bargmann = 0.0;  // their z-Bargmann images
  cplx trace{};          // Tr(W^dagger theta V)
  cplx trace_bargmann{};
  GEstimate g;
  GEstimate g_bargmann;
  double n_v = 0.0, n_v_bargmann = 0.0;
  double n_w = 0.0, n_w_bargmann = 0.0;
};

OpenVsIsolated open_vs_isolated_report(const ComplexMatrix& theta, const ComplexMatrix& v, const ComplexMatrix& w,
                                       UnitCirclePoint z, const AscentOptions& options = {});

}  // namespace zbargmann
