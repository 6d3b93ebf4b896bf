#pragma once

// Classical and quantum Grothendieck quadratic forms, the rescaling norm N,
// the suprema g and g', and the phase-space special cases of Q.
//
// g(theta) has no closed form in general. g_lower() returns the best value of
// C found by multistart alternating phase ascent (a certified lower bound);
// min(g', ||theta||_1) is the matching certified upper bound.

#include <cstdint>
#include <vector>

#include "zbargmann/hilbert.hpp"

namespace zbargmann {

struct GrothendieckConstantBound {
  static constexpr double k_G_upper = 1.4049;
};

inline constexpr double kDiscTolerance = 1e-12;
inline constexpr double kRescalingTolerance = 1e-12;
inline constexpr double kWindowMargin = 1e-6;

// Scalars a_r (or b_s) with |entry| <= 1.
class UnitDiscVector {
 public:
  static UnitDiscVector from(std::vector<cplx> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<cplx>& entries() const noexcept { return entries_; }
  const cplx& operator[](std::size_t i) const { return entries_[i]; }

  UnitDiscVector conjugated() const;

 private:
  explicit UnitDiscVector(std::vector<cplx> e) : entries_(std::move(e)) {}
  std::vector<cplx> entries_;
};

// Matrix with N(V) <= 1.
class RescalingMatrix {
 public:
  static RescalingMatrix from(ComplexMatrix v);

  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  explicit RescalingMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

// N(V) = max_i sqrt(sum_j |V_ij|^2)
double rescaling_norm(const ComplexMatrix& v);

// lambda V / N(V), 0 < lambda <= 1
RescalingMatrix normalize_rescaling(const ComplexMatrix& v, double lambda = 1.0);

// A_rs = a_r / sqrt(d): every entry of row r equals a_r / sqrt(d).
RescalingMatrix dequantisation_matrix(const UnitDiscVector& a);

// |sum_rs theta_rs a_r b_s|
double classical_form(const ComplexMatrix& theta, const UnitDiscVector& a, const UnitDiscVector& b);

// |Tr(W^dagger theta V)| / (N(W) N(V) g)
double quantum_form(const ComplexMatrix& theta, const ComplexMatrix& v, const ComplexMatrix& w, double g_value);

struct AscentOptions {
  int restarts = 64;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-12;
  int max_sweeps = 10000;
  double window_margin = kWindowMargin;
};

struct GrothendieckReport {
  double g_lower = 0.0;
  double g_prime = 0.0;
  double one_norm = 0.0;
  bool window_open = false;
  UnitDiscVector witness_a = UnitDiscVector::from({});
  UnitDiscVector witness_b = UnitDiscVector::from({});
  int restarts_used = 0;

  double upper_bound() const;
};

GrothendieckReport g_lower(const ComplexMatrix& theta, int restarts, std::uint64_t seed);
GrothendieckReport g_lower(const ComplexMatrix& theta, const AscentOptions& options);

// Closed form (sum_r |f_r|)^2 for theta = |f><f| with ||f|| = 1.
double g_pure(const Ket& f);

// n * s_max
double g_prime(const ComplexMatrix& theta);

// g_lower < min(g', ||theta||_1) - margin. A true result is necessary for Q > 1.
bool window_check(const ComplexMatrix& theta, const GrothendieckReport& report,
                  double margin = kWindowMargin);

// Best available g: ||theta||_1 (exact) for diagonal and rank-one matrices,
// which covers pure-state density matrices; optimizer lower bound otherwise.
struct GEstimate {
  double value = 0.0;
  bool exact = false;
};
GEstimate g_estimate(const ComplexMatrix& theta, const AscentOptions& options = {});

// |<f| D(a,b,c) |f>| / g_pure(f)
double weyl_q(const Ket& f, std::int64_t a, std::int64_t b, std::int64_t c);

// |<f| P(a,b) |f>| / g_pure(f)
double wigner_q(const Ket& f, std::int64_t a, std::int64_t b);

// |<f|U|X;nu>|^2 / g_pure(f)
double tomography_q(const Ket& f, const ComplexMatrix& u, std::size_t nu);

// |<X;nu| exp(iHt) f>| / sum_r |f_r|
double component_q(const Ket& f, const HermitianMatrix& h, double t, std::size_t nu);

}  // namespace zbargmann
