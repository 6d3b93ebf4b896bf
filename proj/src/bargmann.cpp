#include "zbargmann/bargmann.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zbargmann/errors.hpp"

namespace zbargmann {
namespace {

void require_d(std::size_t d, const char* op) {
  if (d < 2) throw InputError(std::string(op) + ": d must be >= 2, got " + std::to_string(d));
}

std::size_t half_dim(std::size_t n, const char* op) {
  if (n < 4 || n % 2 != 0) {
    throw InputError(std::string(op) + ": expected an even dimension 2d >= 4, got " + std::to_string(n));
  }
  return n / 2;
}

cplx antipodal_factor(UnitCirclePoint z1, UnitCirclePoint z2) {
  const cplx f = 1.0 + std::conj(z1.value()) * z2.value();
  if (std::abs(f) < kAntipodalTolerance) {
    throw InputError("z1 and z2 are (nearly) antipodal: |1 + z1* z2| = " + std::to_string(std::abs(f)));
  }
  return f;
}

}  // namespace

Ket fiducial(std::size_t d, UnitCirclePoint z) {
  require_d(d, "fiducial");
  Ket f(d);
  f[0] = std::conj(z.value()) / std::numbers::sqrt2;
  f[1] = 1.0 / std::numbers::sqrt2;
  return f;
}

std::vector<Ket> coherent_family(std::size_t d, UnitCirclePoint z) {
  require_d(d, "coherent_family");
  const ComplexMatrix x = shift_X(d);
  std::vector<Ket> family;
  family.reserve(2 * d);
  for (const auto& point : {z, z.negated()}) {
    Ket k = fiducial(d, point);
    for (std::size_t r = 0; r < d; ++r) {
      family.push_back(k);
      k = x * k;
    }
  }
  return family;
}

ComplexMatrix varpi(std::size_t d) {
  ComplexMatrix p(d);
  for (std::size_t nu = 0; nu < d; ++nu) p((d + 1 - nu) % d, nu) = 1.0;
  return p;
}

ComplexMatrix block_A(std::size_t d, cplx z) {
  require_d(d, "block_A");
  // (1 + z X^dagger) P / 2: column c holds 1/2 at row -c and z/2 at row 1-c.
  ComplexMatrix a(d);
  for (std::size_t c = 0; c < d; ++c) {
    a((d - c) % d, c) += 0.5;
    a((d + 1 - c) % d, c) += 0.5 * z;
  }
  return a;
}

SemiUnitary SemiUnitary::build(std::size_t d, UnitCirclePoint z) {
  require_d(d, "build_M");
  const ComplexMatrix plus = block_A(d, z.value());
  const ComplexMatrix minus = block_A(d, -z.value());
  ComplexMatrix m(d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = plus(r, c);
      m(r, c + d) = minus(r, c);
    }
  }
  return SemiUnitary(d, z, std::move(m));
}

SemiUnitary build_M(std::size_t d, UnitCirclePoint z) { return SemiUnitary::build(d, z); }

ProjectorPair projector(std::size_t d, UnitCirclePoint z) {
  const SemiUnitary mp = build_M(d, z);
  const SemiUnitary mm = build_M(d, z.negated());
  ProjectorPair pp;
  pp.d = d;
  pp.z = z;
  pp.pi_plus = mp.adjoint() * mp.matrix();
  pp.pi_minus = mm.adjoint() * mm.matrix();
  return pp;
}

ComplexMatrix projector_pair_z(std::size_t d, UnitCirclePoint z1, UnitCirclePoint z2) {
  const cplx f = antipodal_factor(z1, z2);
  return (2.0 / f) * (build_M(d, z1).adjoint() * build_M(d, z2).matrix());
}

BargmannVector to_bargmann_vec(const Ket& v, UnitCirclePoint z) {
  const std::size_t d = v.dim();
  require_d(d, "to_bargmann_vec");
  return {d, z, build_M(d, z).adjoint() * v};
}

Ket from_bargmann_vec(const BargmannVector& vb) {
  if (vb.entries.dim() != 2 * vb.d) throw InputError("from_bargmann_vec: expected 2d coordinates");
  return build_M(vb.d, vb.z).matrix() * vb.entries;
}

ComplexMatrix to_bargmann_mat(const ComplexMatrix& t, UnitCirclePoint z) {
  const std::size_t d = t.dim();
  require_d(d, "to_bargmann_mat");
  const SemiUnitary m = build_M(d, z);
  return m.adjoint() * t * m.matrix();
}

ComplexMatrix from_bargmann_mat(const ComplexMatrix& tb, UnitCirclePoint z) {
  const std::size_t d = half_dim(tb.dim(), "from_bargmann_mat");
  const SemiUnitary m = build_M(d, z);
  return m.matrix() * tb * m.adjoint();
}

bool is_physical_vec(const Ket& vb, UnitCirclePoint z) {
  const std::size_t d = half_dim(vb.dim(), "is_physical_vec");
  const ProjectorPair pp = projector(d, z);
  return max_abs_diff(pp.pi_plus * vb, vb) <= kPhysicalityTolerance;
}

bool is_physical_mat(const ComplexMatrix& tb, UnitCirclePoint z) {
  const std::size_t d = half_dim(tb.dim(), "is_physical_mat");
  const ProjectorPair pp = projector(d, z);
  return max_abs_diff(pp.pi_plus * tb * pp.pi_plus, tb) <= kPhysicalityTolerance;
}

BargmannVector change_representation_vec(const BargmannVector& vb, UnitCirclePoint z1) {
  const UnitCirclePoint z2 = vb.z;
  const cplx f = antipodal_factor(z1, z2);
  if (!is_physical_vec(vb.entries, z2)) {
    throw InputError("change_representation_vec: input is not a z-Bargmann vector at its own z");
  }
  const ComplexMatrix pi12 = projector_pair_z(vb.d, z1, z2);
  return {vb.d, z1, (f / 2.0) * (pi12 * vb.entries)};
}

ComplexMatrix change_representation_mat(const ComplexMatrix& tb, UnitCirclePoint z2, UnitCirclePoint z1) {
  const std::size_t d = half_dim(tb.dim(), "change_representation_mat");
  const cplx f = antipodal_factor(z1, z2);
  if (!is_physical_mat(tb, z2)) {
    throw InputError("change_representation_mat: input is not a z-Bargmann matrix at its own z");
  }
  const ComplexMatrix pi12 = projector_pair_z(d, z1, z2);
  const ComplexMatrix pi21 = projector_pair_z(d, z2, z1);
  // 2 + z1* z2 + z1 z2* = |1 + z1* z2|^2
  return (std::norm(f) / 4.0) * (pi12 * tb * pi21);
}

}  // namespace zbargmann
