#include "zbargmann/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zbargmann/errors.hpp"

namespace zbargmann {
namespace {

constexpr double kUnitaryTolerance = 1e-9;

void require_match(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) +
                     ")");
  }
}

double real_current(cplx value, const char* op) {
  const double residue = std::abs(value.imag());
  if (residue > kCurrentResidueTolerance * std::max(1.0, std::abs(value.real()))) {
    throw InvariantViolation(std::string(op) + ": imaginary residue " + std::to_string(residue) +
                                 " (non-Hermitian input?)",
                             residue);
  }
  return value.real();
}

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// rho(t) and the current from a cached propagator.
class Trajectory {
 public:
  Trajectory(const DensityMatrix& rho0, const HermitianMatrix& h, const ComplexMatrix& projector)
      : rho0_(rho0.matrix()), propagator_(h), projector_(projector), c1_(commutator(projector, h.matrix())) {
    require_match(rho0.dim(), h.dim(), "trajectory");
    require_match(projector.dim(), h.dim(), "trajectory");
  }

  ComplexMatrix rho(double t) const {
    const ComplexMatrix u = propagator_.at(t);
    return u * rho0_ * u.adjoint();
  }

  double current(const ComplexMatrix& rho_t) const {
    return real_current(cplx{0.0, 1.0} * trace_product(c1_, rho_t), "current");
  }

  double occupancy(const ComplexMatrix& rho_t) const { return trace_product(projector_, rho_t).real(); }

 private:
  ComplexMatrix rho0_;
  UnitaryPropagator propagator_;
  ComplexMatrix projector_;
  ComplexMatrix c1_;
};

void require_pp(const ProjectorPair& pp, const HermitianMatrix& h) {
  require_match(pp.pi_plus.dim(), h.dim(), "projector vs Hamiltonian");
}

}  // namespace

DensityMatrix DensityMatrix::from(ComplexMatrix rho) {
  if (!rho.is_square()) throw InputError("density matrix must be square");
  if (!rho.all_finite()) throw InputError("density matrix has non-finite entries");
  const double herm = hermiticity_residual(rho);
  if (herm > kDensityTolerance) {
    throw InputError("density matrix is not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kDensityTolerance) {
    throw InputError("density matrix trace is " + std::to_string(tr) + ", not 1");
  }
  const auto eig = hermitian_eigen(HermitianMatrix::from(rho, kDensityTolerance));
  if (eig.values.front() < -kDensityTolerance) {
    throw InputError("density matrix has negative eigenvalue " + std::to_string(eig.values.front()));
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::pure(const Ket& f) {
  const double n = f.norm();
  if (std::abs(n - 1.0) > kDensityTolerance) {
    throw InputError("pure state is not normalized (norm " + std::to_string(n) + ")");
  }
  return DensityMatrix(outer(f, f));
}

bool DensityMatrix::is_pure(double tolerance) const {
  return std::abs(trace_product(rho_, rho_).real() - 1.0) <= tolerance;
}

DensityMatrix evolve(const DensityMatrix& rho0, const HermitianMatrix& h, double t) {
  require_match(rho0.dim(), h.dim(), "evolve");
  const ComplexMatrix u = hermitian_expm(h, t);
  ComplexMatrix rho = u * rho0.matrix() * u.adjoint();
  return DensityMatrix::from(std::move(rho));
}

double current_with_projector(const DensityMatrix& rho0, const HermitianMatrix& h, const ComplexMatrix& projector,
                              double t) {
  const Trajectory traj(rho0, h, projector);
  return traj.current(traj.rho(t));
}

double current(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp, double t) {
  require_pp(pp, h);
  return current_with_projector(rho0, h, pp.pi_plus, t);
}

double TaylorCurrent::evaluate(double t) const {
  // Horner
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TaylorCurrent current_derivatives_at_zero(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp,
                                          int order) {
  require_pp(pp, h);
  require_match(rho0.dim(), h.dim(), "current_derivatives_at_zero");
  if (order < 0) throw InputError("current_derivatives_at_zero: order must be >= 0");
  // J^(k)(0) = i^(k+1) Tr(C_{k+1} rho0) with C_1 = [Pi, H], C_{k+1} = [C_k, H].
  TaylorCurrent tc;
  tc.z = pp.z;
  ComplexMatrix nested = commutator(pp.pi_plus, h.matrix());
  double factorial = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      nested = commutator(nested, h.matrix());
      factorial *= k;
    }
    const double derivative = real_current(i_pow(k + 1) * trace_product(nested, rho0.matrix()), "current derivative");
    tc.coefficients.push_back(derivative / factorial);
  }
  return tc;
}

double taylor_current_eval(const TaylorCurrent& tc, double t) { return tc.evaluate(t); }

std::size_t CurrentSeries::sign_changes() const {
  std::size_t changes = 0;
  int last = 0;
  for (double j : j_values) {
    const int s = (j > 0.0) - (j < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<double> time_grid(double start, double end, double step) {
  if (!(step > 0.0)) throw InputError("time grid: step must be positive");
  if (!(end >= start)) throw InputError("time grid: end must be >= start");
  const auto n = static_cast<std::size_t>(std::floor((end - start) / step + 0.5));
  std::vector<double> grid;
  grid.reserve(n + 1);
  // index * step rather than accumulation, so grid points carry no drift
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

CurrentSeries current_series(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp,
                             std::span<const double> times) {
  require_pp(pp, h);
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw InputError("current_series: time grid must be strictly increasing");
  }
  const Trajectory traj(rho0, h, pp.pi_plus);
  CurrentSeries series;
  series.z = pp.z;
  series.times.assign(times.begin(), times.end());
  series.j_values.reserve(times.size());
  series.occupancy.reserve(times.size());
  for (double t : times) {
    const ComplexMatrix rho_t = traj.rho(t);
    series.j_values.push_back(traj.current(rho_t));
    series.occupancy.push_back(traj.occupancy(rho_t));
  }
  return series;
}

void validate_series(const CurrentSeries& series, const HermitianMatrix& h, const ProjectorPair& pp) {
  for (double occ : series.occupancy) {
    if (occ < -1e-9 || occ > 1.0 + 1e-9) {
      throw InvariantViolation("occupancy outside [0, 1]: " + std::to_string(occ), std::max(-occ, occ - 1.0));
    }
  }
  const std::size_t n = series.times.size();
  if (n < 3) return;
  const double step = series.times[1] - series.times[0];
  for (std::size_t i = 2; i < n; ++i) {
    if (std::abs((series.times[i] - series.times[i - 1]) - step) > 1e-9 * std::max(1.0, step)) return;
  }
  // Central difference error is (step^2/6) |J''| <= (step^2/6) ||C3||, with C_k
  // the nested commutators of Pi with H.
  const ComplexMatrix c2 = commutator(commutator(pp.pi_plus, h.matrix()), h.matrix());
  const ComplexMatrix c3 = commutator(c2, h.matrix());
  const double tolerance =
      step * step * std::max(10.0 * max_singular_value(c2), max_singular_value(c3) / 6.0) + 1e-12;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double diff = (series.occupancy[i + 1] - series.occupancy[i - 1]) / (2.0 * step);
    worst = std::max(worst, std::abs(diff - series.j_values[i]));
  }
  if (worst > tolerance) {
    throw InvariantViolation("current does not match the derivative of occupancy: residual " + std::to_string(worst) +
                                 " > " + std::to_string(tolerance),
                             worst);
  }
}

GSupplier pure_state_g() {
  return [](const DensityMatrix& rho) -> GValue {
    if (!rho.is_pure(1e-9)) throw InputError("closed-form g needs a pure state");
    return {matrix_one_norm(rho.matrix()), true};
  };
}

GSupplier optimizer_g(const AscentOptions& options) {
  return [options](const DensityMatrix& rho) -> GValue {
    const GEstimate e = g_estimate(rho.matrix(), options);
    return {e.value, e.exact};
  };
}

QSample q_of_t(const DensityMatrix& rho0, const HermitianMatrix& h, const ProjectorPair& pp, double t,
               const GSupplier& g_supplier) {
  require_pp(pp, h);
  const Trajectory traj(rho0, h, pp.pi_plus);
  ComplexMatrix rho_t = traj.rho(t);
  const cplx occupancy = trace_product(pp.pi_plus, rho_t);
  const GValue g = g_supplier(DensityMatrix::from(std::move(rho_t)));
  if (!(g.value > 0.0)) throw InputError("q_of_t: g must be positive");
  QSample s;
  s.q_times_g = 2.0 * std::abs(occupancy);
  s.g = g.value;
  s.g_exact = g.exact;
  s.q = s.q_times_g / g.value;
  return s;
}

double isolated_q(const DensityMatrix& rho0, const HermitianMatrix& h, double t, double g_value) {
  const ComplexMatrix u = hermitian_expm(h, -t);
  return quantum_form(rho0.matrix(), u, u, g_value);
}

bool projected_unitary_is_rescaling(const ComplexMatrix& v, const ProjectorPair& pp) {
  require_match(v.dim(), pp.pi_plus.dim(), "projected_unitary_is_rescaling");
  const double ures = unitarity_residual(v);
  if (ures > kUnitaryTolerance) {
    throw InputError("projected_unitary_is_rescaling: V is not unitary (residual " + std::to_string(ures) + ")");
  }
  for (const ComplexMatrix* pi : {&pp.pi_plus, &pp.pi_minus}) {
    const ComplexMatrix pv = *pi * v;
    const double n = rescaling_norm(pv);
    if (n > 1.0 + kRescalingTolerance) {
      throw InvariantViolation("projected unitary has N = " + std::to_string(n), n - 1.0);
    }
    const ComplexMatrix gram = pv * pv.adjoint();
    for (std::size_t i = 0; i < gram.rows(); ++i) {
      const double dev = std::abs(gram(i, i) - 0.5);
      if (dev > kConstructionTolerance) {
        throw InvariantViolation("diagonal of Pi V V^dagger Pi differs from 1/2 by " + std::to_string(dev), dev);
      }
    }
  }
  return true;
}

OpenVsIsolated open_vs_isolated_report(const ComplexMatrix& theta, const ComplexMatrix& v, const ComplexMatrix& w,
                                       UnitCirclePoint z, const AscentOptions& options) {
  const std::size_t d = theta.dim();
  require_match(v.dim(), d, "open_vs_isolated_report");
  require_match(w.dim(), d, "open_vs_isolated_report");
  const ComplexMatrix theta_b = to_bargmann_mat(theta, z);
  const ComplexMatrix v_b = to_bargmann_mat(v, z);
  const ComplexMatrix w_b = to_bargmann_mat(w, z);

  OpenVsIsolated r;
  r.trace = trace_product(w.adjoint(), theta * v);
  r.trace_bargmann = trace_product(w_b.adjoint(), theta_b * v_b);
  r.g = g_estimate(theta, options);
  r.g_bargmann = g_estimate(theta_b, options);
  r.n_v = rescaling_norm(v);
  r.n_w = rescaling_norm(w);
  r.n_v_bargmann = rescaling_norm(v_b);
  r.n_w_bargmann = rescaling_norm(w_b);
  r.q = quantum_form(theta, v, w, r.g.value);
  r.q_bargmann = quantum_form(theta_b, v_b, w_b, r.g_bargmann.value);
  return r;
}

}  // namespace zbargmann
