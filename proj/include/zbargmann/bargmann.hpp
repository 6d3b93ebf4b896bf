#pragma once

// Semi-unitary d x 2d matrices M(z), the projectors Pi(z) = M(z)^dagger M(z),
// and the z-Bargmann maps that embed the d-dimensional open system into a
// 2d-dimensional isolated one:
//
//   v   -> v_B = M(z)^dagger v          T   -> T_B = M(z)^dagger T M(z)
//   v_B -> v   = M(z) v_B               T_B -> T   = M(z) T_B M(z)^dagger
//
// M(z) = (A(z) | A(-z)) with A(z) = (1 + z X^dagger) P / 2, P the parity
// |X;nu> -> |X;-nu>. For d = 3 this is
//
//          | 1  z  0  1 -z  0 |
//   M(z) = | z  0  1 -z  0  1 | / 2
//          | 0  1  z  0  1 -z |
//
// and the columns are (+-z / sqrt 2) X^r |+-z> for the fiducial
// |z> = (z*, 1, 0, ..., 0)^T / sqrt 2.

#include <vector>

#include "zbargmann/hilbert.hpp"

namespace zbargmann {

inline constexpr double kConstructionTolerance = 1e-10;
inline constexpr double kPhysicalityTolerance = 1e-9;
inline constexpr double kAntipodalTolerance = 1e-8;

// (z*, 1, 0, ..., 0)^T / sqrt 2
Ket fiducial(std::size_t d, UnitCirclePoint z);

// {X^r |z>} followed by {X^r |-z>}, r = 0..d-1. Resolves the identity with
// weight 1/2.
std::vector<Ket> coherent_family(std::size_t d, UnitCirclePoint z);

// The parity matrix varpi: |X;nu> -> |X;1-nu>. X varpi is the parity F^2.
ComplexMatrix varpi(std::size_t d);

// d x d block A(z)
ComplexMatrix block_A(std::size_t d, cplx z);

class SemiUnitary {
 public:
  static SemiUnitary build(std::size_t d, UnitCirclePoint z);

  std::size_t d() const noexcept { return d_; }
  UnitCirclePoint z() const noexcept { return z_; }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const ComplexMatrix& adjoint() const noexcept { return m_adj_; }

 private:
  SemiUnitary(std::size_t d, UnitCirclePoint z, ComplexMatrix m)
      : d_(d), z_(z), m_(std::move(m)), m_adj_(m_.adjoint()) {}

  std::size_t d_;
  UnitCirclePoint z_;
  ComplexMatrix m_;
  ComplexMatrix m_adj_;
};

SemiUnitary build_M(std::size_t d, UnitCirclePoint z);

// Pi(z) and Pi(-z): complementary rank-d orthogonal projectors on C^{2d}.
struct ProjectorPair {
  std::size_t d = 0;
  UnitCirclePoint z;
  ComplexMatrix pi_plus;
  ComplexMatrix pi_minus;
};

ProjectorPair projector(std::size_t d, UnitCirclePoint z);

// Pi(z1,z2) = 2/(1 + z1* z2) M(z1)^dagger M(z2): idempotent, trace d,
// Hermitian only for z1 = z2. Rejects |1 + z1* z2| < kAntipodalTolerance.
ComplexMatrix projector_pair_z(std::size_t d, UnitCirclePoint z1, UnitCirclePoint z2);

struct BargmannVector {
  std::size_t d = 0;
  UnitCirclePoint z;
  Ket entries;  // 2d coordinates
};

BargmannVector to_bargmann_vec(const Ket& v, UnitCirclePoint z);
Ket from_bargmann_vec(const BargmannVector& vb);

ComplexMatrix to_bargmann_mat(const ComplexMatrix& t, UnitCirclePoint z);
ComplexMatrix from_bargmann_mat(const ComplexMatrix& tb, UnitCirclePoint z);

// Pi(z) v_B = v_B (resp. Pi(z) T_B Pi(z) = T_B) to kPhysicalityTolerance.
bool is_physical_vec(const Ket& vb, UnitCirclePoint z);
bool is_physical_mat(const ComplexMatrix& tb, UnitCirclePoint z);

// v_B(z2) -> v_B(z1) through Pi(z1,z2) with the factor 2/(1 + z1* z2) divided out.
BargmannVector change_representation_vec(const BargmannVector& vb, UnitCirclePoint z1);

// T_B(z2) -> T_B(z1) = (2 + z1* z2 + z1 z2*)/4 Pi(z1,z2) T_B(z2) Pi(z2,z1)
ComplexMatrix change_representation_mat(const ComplexMatrix& tb, UnitCirclePoint z2, UnitCirclePoint z1);

}  // namespace zbargmann
