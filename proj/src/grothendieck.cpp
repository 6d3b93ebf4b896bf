#include "zbargmann/grothendieck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zbargmann/errors.hpp"
#include "zbargmann/kernels.hpp"
#include "zbargmann/random.hpp"

namespace zbargmann {
namespace {

constexpr double kNormalizationTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-9;

void require_unit_norm(const Ket& f, const char* op) {
  const double n = f.norm();
  if (!(std::abs(n - 1.0) <= kNormalizationTolerance)) {
    throw InputError(std::string(op) + ": state is not normalized (norm " + std::to_string(n) + ")");
  }
}

// conj(y)/|y|, or 1 when y vanishes and the phase is free.
cplx aligning_phase(cplx y) {
  const double m = std::abs(y);
  if (m < std::numeric_limits<double>::min()) return {1.0, 0.0};
  return std::conj(y) / m;
}

bool is_diagonal(const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != cplx{}) return false;
  return true;
}

}  // namespace

UnitDiscVector UnitDiscVector::from(std::vector<cplx> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double m = std::abs(entries[i]);
    if (!(m <= 1.0 + kDiscTolerance)) {
      throw InputError("entry " + std::to_string(i) + " has modulus " + std::to_string(m) +
                       ", outside the unit disc");
    }
  }
  return UnitDiscVector(std::move(entries));
}

UnitDiscVector UnitDiscVector::conjugated() const {
  std::vector<cplx> c(entries_.size());
  std::transform(entries_.begin(), entries_.end(), c.begin(), [](cplx z) { return std::conj(z); });
  return UnitDiscVector(std::move(c));
}

RescalingMatrix RescalingMatrix::from(ComplexMatrix v) {
  const double n = rescaling_norm(v);
  if (!(n <= 1.0 + kRescalingTolerance)) {
    throw InputError("not a rescaling matrix: N(V) = " + std::to_string(n));
  }
  return RescalingMatrix(std::move(v));
}

double rescaling_norm(const ComplexMatrix& v) {
  double worst = 0.0;
  for (std::size_t r = 0; r < v.rows(); ++r) worst = std::max(worst, kernels::norm_sq(v.row(r)));
  return std::sqrt(worst);
}

RescalingMatrix normalize_rescaling(const ComplexMatrix& v, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw InputError("normalize_rescaling: lambda must lie in (0, 1], got " + std::to_string(lambda));
  }
  const double n = rescaling_norm(v);
  if (n == 0.0) throw InputError("normalize_rescaling: zero matrix");
  return RescalingMatrix::from((lambda / n) * v);
}

RescalingMatrix dequantisation_matrix(const UnitDiscVector& a) {
  const std::size_t d = a.size();
  if (d == 0) throw InputError("dequantisation_matrix: empty vector");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) m(r, s) = a[r] * scale;
  return RescalingMatrix::from(std::move(m));
}

double classical_form(const ComplexMatrix& theta, const UnitDiscVector& a, const UnitDiscVector& b) {
  if (a.size() != theta.rows() || b.size() != theta.cols()) {
    throw InputError("classical_form: scalar vectors do not match the matrix shape");
  }
  const Ket bt(b.entries());
  const Ket at(a.entries());
  return std::abs(kernels::dotu(at.data(), (theta * bt).data()));
}

double quantum_form(const ComplexMatrix& theta, const ComplexMatrix& v, const ComplexMatrix& w, double g_value) {
  const std::size_t n = theta.dim();
  if (v.dim() != n || w.dim() != n) throw InputError("quantum_form: V, W and theta must share a dimension");
  if (!(g_value > 0.0)) throw InputError("quantum_form: g must be positive");
  const double nv = rescaling_norm(v);
  const double nw = rescaling_norm(w);
  if (nv == 0.0 || nw == 0.0) throw InputError("quantum_form: N(V) or N(W) is zero");
  const cplx tr = trace_product(w.adjoint(), theta * v);
  return std::abs(tr) / (nw * nv * g_value);
}

double GrothendieckReport::upper_bound() const { return std::min(g_prime, one_norm); }

GrothendieckReport g_lower(const ComplexMatrix& theta, int restarts, std::uint64_t seed) {
  AscentOptions options;
  options.restarts = restarts;
  options.seed = seed;
  return g_lower(theta, options);
}

GrothendieckReport g_lower(const ComplexMatrix& theta, const AscentOptions& options) {
  const std::size_t n = theta.dim();
  if (options.restarts < 1) throw InputError("g_lower: restarts must be >= 1");
  if (max_abs(theta) == 0.0) throw InputError("g_lower: theta is zero");

  const auto& k = kernels::active();
  std::vector<cplx> a(n), b(n), y(n), w(n);
  std::vector<cplx> best_a(n, 1.0), best_b(n, 1.0);
  double best = -1.0;

  for (int restart = 0; restart < options.restarts; ++restart) {
    CounterRng rng(options.seed, static_cast<std::uint64_t>(restart));
    for (auto& bs : b) bs = random::unit_phase(rng);

    double previous = -1.0;
    double value = 0.0;
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      // a_r <- phase of conj((theta b)_r); C then equals sum_r |(theta b)_r|
      for (std::size_t r = 0; r < n; ++r) y[r] = k.dotu(n, theta.row(r).data(), b.data());
      for (std::size_t r = 0; r < n; ++r) a[r] = aligning_phase(y[r]);
      // b_s <- phase of conj((a^T theta)_s)
      std::fill(w.begin(), w.end(), cplx{});
      for (std::size_t r = 0; r < n; ++r) k.axpy(n, a[r], theta.row(r).data(), w.data());
      for (std::size_t s = 0; s < n; ++s) b[s] = aligning_phase(w[s]);
      value = k.abs_sum(n, w.data());
      if (value - previous <= options.tolerance * std::max(1.0, value)) break;
      previous = value;
    }
    if (value > best) {
      best = value;
      best_a = a;
      best_b = b;
    }
  }

  GrothendieckReport report;
  report.witness_a = UnitDiscVector::from(best_a);
  report.witness_b = UnitDiscVector::from(best_b);
  report.g_lower = classical_form(theta, report.witness_a, report.witness_b);
  report.g_prime = g_prime(theta);
  report.one_norm = matrix_one_norm(theta);
  report.restarts_used = options.restarts;
  report.window_open = report.g_lower < report.upper_bound() - options.window_margin;
  return report;
}

double g_pure(const Ket& f) {
  require_unit_norm(f, "g_pure");
  const double s = kernels::abs_sum(f.data());
  return s * s;
}

double g_prime(const ComplexMatrix& theta) {
  return static_cast<double>(theta.dim()) * max_singular_value(theta);
}

bool window_check(const ComplexMatrix& theta, const GrothendieckReport& report, double margin) {
  const double one_norm = matrix_one_norm(theta);
  if (std::abs(one_norm - report.one_norm) > 1e-9 * std::max(1.0, one_norm)) {
    throw InputError("window_check: report was not computed from this matrix");
  }
  return report.g_lower < std::min(report.g_prime, report.one_norm) - margin;
}

GEstimate g_estimate(const ComplexMatrix& theta, const AscentOptions& options) {
  // Diagonal: choose a_r b_r = conj(phase of theta_rr). Rank one, theta = u v^dagger:
  // C factorizes and the phases give (sum|u_r|)(sum|v_s|). Both equal ||theta||_1.
  if (is_diagonal(theta)) return {matrix_one_norm(theta), true};
  const auto sv = singular_values(theta);
  if (sv.size() >= 2 && sv[1] <= 1e-12 * sv[0]) return {matrix_one_norm(theta), true};
  return {g_lower(theta, options).g_lower, false};
}

double weyl_q(const Ket& f, std::int64_t a, std::int64_t b, std::int64_t c) {
  const double g = g_pure(f);
  return std::abs(inner(f, displacement(f.dim(), a, b, c) * f)) / g;
}

double wigner_q(const Ket& f, std::int64_t a, std::int64_t b) {
  const double g = g_pure(f);
  return std::abs(inner(f, displaced_parity(f.dim(), a, b) * f)) / g;
}

double tomography_q(const Ket& f, const ComplexMatrix& u, std::size_t nu) {
  const double g = g_pure(f);
  const std::size_t d = f.dim();
  if (u.dim() != d) throw InputError("tomography_q: U and f differ in dimension");
  const double ures = unitarity_residual(u);
  if (ures > kUnitaryTolerance) {
    throw InputError("tomography_q: U is not unitary (residual " + std::to_string(ures) + ")");
  }
  const Ket column = u * position_basis(d, nu);
  const ComplexMatrix v = outer(column, column);
  const double nv = rescaling_norm(v);
  if (nv > 1.0 + kRescalingTolerance) {
    throw InvariantViolation("tomography_q: U|nu><nu|U^dagger is not a rescaling matrix", nv - 1.0);
  }
  return std::norm(inner(f, column)) / g;
}

double component_q(const Ket& f, const HermitianMatrix& h, double t, std::size_t nu) {
  require_unit_norm(f, "component_q");
  if (h.dim() != f.dim()) throw InputError("component_q: H and f differ in dimension");
  if (nu >= f.dim()) throw InputError("component_q: index out of range");
  const Ket ft = hermitian_expm(h, t) * f;
  return std::abs(ft[nu]) / kernels::abs_sum(f.data());
}

}  // namespace zbargmann
