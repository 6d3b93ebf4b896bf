#pragma once

// Finite-dimensional Hilbert-space primitives on Z_d: position/momentum bases,
// the shift X, clock Z and Fourier F matrices, Heisenberg-Weyl displacements,
// displaced parity, and exp(iHt) for Hermitian H.

#include <cstdint>
#include <vector>

#include "zbargmann/matrix.hpp"

namespace zbargmann {

inline constexpr double kHermiticityTolerance = 1e-9;
inline constexpr double kUnitCircleTolerance = 1e-12;

// A point z = exp(i * angle) on the unit circle. Always built from an angle so
// that |z| = 1 to rounding; multiples of pi/2 are exact.
class UnitCirclePoint {
 public:
  UnitCirclePoint() : UnitCirclePoint(0.0) {}

  static UnitCirclePoint from_angle(double radians);
  // exp(i * pi * num / den)
  static UnitCirclePoint from_pi_fraction(std::int64_t num, std::int64_t den);
  // Accepts a complex value only if it is on the circle to kUnitCircleTolerance.
  static UnitCirclePoint from_value(cplx z);

  double angle() const noexcept { return angle_; }
  cplx value() const noexcept { return value_; }

  UnitCirclePoint negated() const;
  UnitCirclePoint conjugated() const;

 private:
  UnitCirclePoint(double angle, cplx value) : angle_(angle), value_(value) {}
  explicit UnitCirclePoint(double angle);

  double angle_;
  cplx value_;
};

// omega^k with omega = exp(2 pi i / d); k is reduced mod d first.
cplx root_of_unity(std::int64_t k, std::size_t d);

double hermiticity_residual(const ComplexMatrix& h);
double unitarity_residual(const ComplexMatrix& u);

class HermitianMatrix {
 public:
  // Throws InputError (with the measured asymmetry) if ||H - H^dagger||_max
  // exceeds the tolerance. The input is not symmetrized.
  static HermitianMatrix from(ComplexMatrix h, double tolerance = kHermiticityTolerance);

  const ComplexMatrix& matrix() const noexcept { return h_; }
  std::size_t dim() const noexcept { return h_.rows(); }

 private:
  explicit HermitianMatrix(ComplexMatrix h) : h_(std::move(h)) {}
  ComplexMatrix h_;
};

Ket position_basis(std::size_t d, std::size_t index);

ComplexMatrix fourier_matrix(std::size_t d);
ComplexMatrix shift_X(std::size_t d);
ComplexMatrix clock_Z(std::size_t d);
// F^2: the permutation |X;nu> -> |X;-nu>.
ComplexMatrix parity_F2(std::size_t d);

// Z^a X^b omega^c with a, b, c reduced mod d.
ComplexMatrix displacement(std::size_t d, std::int64_t a, std::int64_t b, std::int64_t c);

// D(a,b,0) F^2 D(a,b,0)^dagger: Hermitian involution.
ComplexMatrix displaced_parity(std::size_t d, std::int64_t a, std::int64_t b);

// sum_rs |theta_rs|
double matrix_one_norm(const ComplexMatrix& theta);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors as columns
};

HermitianEigen hermitian_eigen(const HermitianMatrix& h);

// Eigenvalues of an arbitrary complex square matrix (used for spectral checks
// on non-Hermitian Bargmann images), unsorted.
std::vector<cplx> general_eigenvalues(const ComplexMatrix& m);

// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);
double max_singular_value(const ComplexMatrix& m);

// exp(iHt) = U diag(exp(i lambda_k t)) U^dagger
ComplexMatrix hermitian_expm(const HermitianMatrix& h, double t);

// Caches the eigendecomposition of H so exp(iHt) can be evaluated on a grid.
class UnitaryPropagator {
 public:
  explicit UnitaryPropagator(const HermitianMatrix& h);

  ComplexMatrix at(double t) const;
  const HermitianEigen& eigen() const noexcept { return eig_; }

 private:
  HermitianEigen eig_;
  ComplexMatrix vectors_adj_;
};

}  // namespace zbargmann
