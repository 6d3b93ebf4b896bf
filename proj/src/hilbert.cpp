#include "zbargmann/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "eigen_bridge.hpp"
#include "zbargmann/errors.hpp"
#include "zbargmann/kernels.hpp"

namespace zbargmann {
namespace {

std::int64_t mod(std::int64_t k, std::size_t d) {
  const auto n = static_cast<std::int64_t>(d);
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

// i^q for q in {0,1,2,3}
cplx quarter_turn(std::int64_t q) {
  switch (q) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_dim(std::size_t d, const char* op) {
  if (d < 1) throw InputError(std::string(op) + ": dimension must be >= 1");
}

}  // namespace

UnitCirclePoint::UnitCirclePoint(double angle) : angle_(angle), value_(std::polar(1.0, angle)) {}

UnitCirclePoint UnitCirclePoint::from_angle(double radians) {
  if (!std::isfinite(radians)) throw InputError("unit circle point: angle is not finite");
  return UnitCirclePoint(radians);
}

UnitCirclePoint UnitCirclePoint::from_pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("unit circle point: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const double angle = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  if ((2 * num) % den == 0) {
    const std::int64_t q = ((2 * num / den) % 4 + 4) % 4;
    return UnitCirclePoint(angle, quarter_turn(q));
  }
  return UnitCirclePoint(angle);
}

UnitCirclePoint UnitCirclePoint::from_value(cplx z) {
  const double r = std::abs(z);
  if (!(std::abs(r - 1.0) <= kUnitCircleTolerance)) {
    throw InputError("unit circle point: |z| = " + std::to_string(r) + " is not 1");
  }
  return UnitCirclePoint(std::arg(z), z);
}

UnitCirclePoint UnitCirclePoint::negated() const {
  return UnitCirclePoint(angle_ + std::numbers::pi, -value_);
}

UnitCirclePoint UnitCirclePoint::conjugated() const { return UnitCirclePoint(-angle_, std::conj(value_)); }

cplx root_of_unity(std::int64_t k, std::size_t d) {
  require_dim(d, "root_of_unity");
  const std::int64_t m = mod(k, d);
  const auto n = static_cast<std::int64_t>(d);
  if ((4 * m) % n == 0) return quarter_turn(4 * m / n);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
}

double hermiticity_residual(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) worst = std::max(worst, std::abs(h(r, c) - std::conj(h(c, r))));
  return worst;
}

double unitarity_residual(const ComplexMatrix& u) {
  return max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim()));
}

HermitianMatrix HermitianMatrix::from(ComplexMatrix h, double tolerance) {
  if (!h.is_square()) throw InputError("Hamiltonian must be square");
  if (!h.all_finite()) throw InputError("Hamiltonian has non-finite entries");
  const double asym = hermiticity_residual(h);
  if (asym > tolerance) {
    throw InputError("matrix is not Hermitian: max |H - H^dagger| = " + std::to_string(asym) +
                     " exceeds " + std::to_string(tolerance));
  }
  return HermitianMatrix(std::move(h));
}

Ket position_basis(std::size_t d, std::size_t index) {
  require_dim(d, "position_basis");
  if (index >= d) {
    throw InputError("position_basis: index " + std::to_string(index) + " out of range for d = " + std::to_string(d));
  }
  Ket k(d);
  k[index] = 1.0;
  return k;
}

ComplexMatrix fourier_matrix(std::size_t d) {
  require_dim(d, "fourier_matrix");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d);
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = 0; nu < d; ++nu)
      f(mu, nu) = scale * root_of_unity(static_cast<std::int64_t>(mu * nu), d);
  return f;
}

ComplexMatrix shift_X(std::size_t d) {
  require_dim(d, "shift_X");
  ComplexMatrix x(d);
  for (std::size_t r = 0; r < d; ++r) x(r, (r + 1) % d) = 1.0;
  return x;
}

ComplexMatrix clock_Z(std::size_t d) {
  require_dim(d, "clock_Z");
  ComplexMatrix z(d);
  for (std::size_t r = 0; r < d; ++r) z(r, r) = root_of_unity(static_cast<std::int64_t>(r), d);
  return z;
}

ComplexMatrix parity_F2(std::size_t d) {
  require_dim(d, "parity_F2");
  ComplexMatrix p(d);
  for (std::size_t nu = 0; nu < d; ++nu) p((d - nu) % d, nu) = 1.0;
  return p;
}

ComplexMatrix displacement(std::size_t d, std::int64_t a, std::int64_t b, std::int64_t c) {
  require_dim(d, "displacement");
  // (Z^a X^b)_{r, r+b} = omega^{a r}
  const std::int64_t am = mod(a, d);
  const std::int64_t bm = mod(b, d);
  const std::int64_t cm = mod(c, d);
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    const auto col = static_cast<std::size_t>(mod(static_cast<std::int64_t>(r) + bm, d));
    m(r, col) = root_of_unity(am * static_cast<std::int64_t>(r) + cm, d);
  }
  return m;
}

ComplexMatrix displaced_parity(std::size_t d, std::int64_t a, std::int64_t b) {
  const ComplexMatrix dab = displacement(d, a, b, 0);
  return dab * parity_F2(d) * dab.adjoint();
}

double matrix_one_norm(const ComplexMatrix& theta) { return kernels::abs_sum(theta.data()); }

HermitianEigen hermitian_eigen(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(h.matrix()));
  if (solver.info() != Eigen::Success) throw InvariantViolation("Hermitian eigensolver did not converge", 0.0);
  HermitianEigen out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = detail::from_eigen(solver.eigenvectors());
  return out;
}

std::vector<cplx> general_eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(m), false);
  if (solver.info() != Eigen::Success) throw InvariantViolation("eigensolver did not converge", 0.0);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m));
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

double max_singular_value(const ComplexMatrix& m) {
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

ComplexMatrix hermitian_expm(const HermitianMatrix& h, double t) { return UnitaryPropagator(h).at(t); }

UnitaryPropagator::UnitaryPropagator(const HermitianMatrix& h)
    : eig_(hermitian_eigen(h)), vectors_adj_(eig_.vectors.adjoint()) {}

ComplexMatrix UnitaryPropagator::at(double t) const {
  const std::size_t n = eig_.values.size();
  // U diag(e^{i lambda t}): scale the columns of U, then multiply by U^dagger.
  ComplexMatrix scaled = eig_.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx phase = std::polar(1.0, eig_.values[k] * t);
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= phase;
  }
  return scaled * vectors_adj_;
}

}  // namespace zbargmann
