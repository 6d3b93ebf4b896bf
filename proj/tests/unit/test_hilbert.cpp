#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zbargmann/errors.hpp"
#include "zbargmann/hilbert.hpp"
#include "zbargmann/invariants.hpp"
#include "zbargmann/random.hpp"

using namespace zbargmann;

namespace {

ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// exp(iHt) by its power series; fine for small ||Ht||
ComplexMatrix series_expm(const ComplexMatrix& h, double t) {
  const std::size_t n = h.rows();
  ComplexMatrix term = ComplexMatrix::identity(n), sum = ComplexMatrix::identity(n);
  for (int k = 1; k < 80; ++k) {
    term = naive_product(term, (cplx{0.0, t} / static_cast<double>(k)) * h);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("matrix products match plain loops") {
  CounterRng rng(11, 0);
  const ComplexMatrix a = random::complex_matrix(5, rng), b = random::complex_matrix(5, rng);
  CHECK(max_abs_diff(a * b, naive_product(a, b)) < 1e-13);
  const ComplexMatrix rect(2, 5, std::vector<cplx>(10, cplx{1.0, -1.0}));
  CHECK(max_abs_diff(rect * a, naive_product(rect, a)) < 1e-13);
  CHECK_THROWS_AS(a * rect, InputError);
  CHECK(std::abs(trace_product(a, b) - (a * b).trace()) < 1e-13);
  const Ket v = random::complex_ket(5, rng);
  const Ket av = a * v;
  for (std::size_t i = 0; i < 5; ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < 5; ++k) s += a(i, k) * v[k];
    CHECK(std::abs(av[i] - s) < 1e-13);
  }
  const Ket va = left_multiply(v, a);
  for (std::size_t j = 0; j < 5; ++j) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < 5; ++k) s += v[k] * a(k, j);
    CHECK(std::abs(va[j] - s) < 1e-13);
  }
  CHECK(max_abs_diff(matrix_power(a, 3), naive_product(naive_product(a, a), a)) < 1e-12);
  CHECK(max_abs_diff(a.adjoint().adjoint(), a) == 0.0);
  CHECK(max_abs_diff(commutator(a, a), ComplexMatrix(5)) == 0.0);
}

TEST_CASE("unit circle points are exact at quarter turns") {
  CHECK(UnitCirclePoint::from_pi_fraction(1, 2).value() == cplx(0.0, 1.0));
  CHECK(UnitCirclePoint::from_pi_fraction(1, 1).value() == cplx(-1.0, 0.0));
  CHECK(UnitCirclePoint::from_pi_fraction(-1, 2).value() == cplx(0.0, -1.0));
  CHECK(UnitCirclePoint::from_pi_fraction(4, 2).value() == cplx(1.0, 0.0));
  const auto z = UnitCirclePoint::from_pi_fraction(1, 4);
  CHECK(std::abs(z.value() - std::polar(1.0, std::numbers::pi / 4)) < 1e-16);
  CHECK(std::abs(z.negated().value() + z.value()) == 0.0);
  CHECK(z.conjugated().value() == std::conj(z.value()));
  CHECK_THROWS_AS(UnitCirclePoint::from_value({1.0, 1e-3}), InputError);
  CHECK_NOTHROW(UnitCirclePoint::from_value({0.0, 1.0}));
  CHECK_THROWS_AS(UnitCirclePoint::from_pi_fraction(1, 0), InputError);
}

TEST_CASE("shift, clock and Fourier conventions") {
  const std::size_t d = 5;
  const ComplexMatrix x = shift_X(d), z = clock_Z(d), f = fourier_matrix(d);
  // X|nu> = |nu - 1>
  for (std::size_t nu = 0; nu < d; ++nu) {
    CHECK(max_abs_diff(x * position_basis(d, nu), position_basis(d, (nu + d - 1) % d)) == 0.0);
    CHECK(std::abs(z(nu, nu) - std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(nu) / d)) < 1e-15);
  }
  CHECK(std::abs(f(2, 3) - std::polar(1.0, 2.0 * std::numbers::pi * 6.0 / d) / std::sqrt(5.0)) < 1e-15);
  // F^2 |nu> = |-nu>
  const ComplexMatrix f2 = f * f;
  for (std::size_t nu = 0; nu < d; ++nu) {
    CHECK(max_abs_diff(f2 * position_basis(d, nu), position_basis(d, (d - nu) % d)) < 1e-14);
  }
  CHECK(max_abs_diff(parity_F2(d), f2) < 1e-14);
  CHECK(std::abs(root_of_unity(5, 5) - 1.0) == 0.0);
  CHECK_THROWS_AS(position_basis(3, 3), InputError);
}

TEST_CASE("displacement entries and displaced parity") {
  const std::size_t d = 4;
  const ComplexMatrix dm = displacement(d, 1, 3, 2);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const cplx want = c == (r + 3) % d ? root_of_unity(static_cast<std::int64_t>(r) + 2, d) : cplx{};
      CHECK(std::abs(dm(r, c) - want) < 1e-15);
    }
  }
  const ComplexMatrix p = displaced_parity(d, 1, 2);
  CHECK(hermiticity_residual(p) < 1e-14);
  CHECK(max_abs_diff(p * p, ComplexMatrix::identity(d)) < 1e-14);
  CHECK(max_abs_diff(displaced_parity(d, 0, 0), parity_F2(d)) < 1e-14);
}

TEST_CASE("Hermitian input is checked, not symmetrized") {
  ComplexMatrix h = ComplexMatrix::from_rows({{1.0, cplx{0.0, 1.0}}, {cplx{0.0, -1.0}, 2.0}});
  CHECK_NOTHROW(HermitianMatrix::from(h));
  h(0, 1) += 1e-12;
  CHECK_NOTHROW(HermitianMatrix::from(h));
  h(0, 1) += 1e-6;
  CHECK_THROWS_WITH_AS(HermitianMatrix::from(h), doctest::Contains("not Hermitian"), InputError);
  CHECK_THROWS_AS(HermitianMatrix::from(ComplexMatrix(2, 3)), InputError);
}

TEST_CASE("eigensolver, SVD and exponential") {
  CounterRng rng(12, 0);
  const HermitianMatrix h = HermitianMatrix::from(random::hermitian(6, rng));
  const HermitianEigen eig = hermitian_eigen(h);
  for (std::size_t k = 1; k < eig.values.size(); ++k) CHECK(eig.values[k - 1] <= eig.values[k]);
  std::vector<cplx> lambda(eig.values.begin(), eig.values.end());
  const ComplexMatrix rebuilt = eig.vectors * ComplexMatrix::diagonal(lambda) * eig.vectors.adjoint();
  CHECK(max_abs_diff(rebuilt, h.matrix()) < 1e-12);

  const ComplexMatrix a = random::complex_matrix(4, rng);
  const auto sv = singular_values(a);
  const auto ev = hermitian_eigen(HermitianMatrix::from(a.adjoint() * a, 1e-12)).values;
  for (std::size_t k = 0; k < 4; ++k) CHECK(sv[k] * sv[k] == doctest::Approx(ev[3 - k]).epsilon(1e-10));
  CHECK(max_singular_value(a) == doctest::Approx(sv[0]));

  ComplexMatrix small = h.matrix();
  small *= 0.1;
  const HermitianMatrix hs = HermitianMatrix::from(small);
  CHECK(max_abs_diff(hermitian_expm(hs, 0.7), series_expm(small, 0.7)) < 1e-12);
  const UnitaryPropagator prop(hs);
  CHECK(max_abs_diff(prop.at(0.7), hermitian_expm(hs, 0.7)) < 1e-13);
  CHECK(max_abs_diff(prop.at(0.0), ComplexMatrix::identity(6)) < 1e-13);
}

TEST_CASE("one-norm") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{cplx{3.0, 4.0}, -1.0}, {0.0, cplx{0.0, 2.0}}});
  CHECK(matrix_one_norm(m) == doctest::Approx(8.0));
}

TEST_CASE("hilbert invariant suite for d = 2..8") {
  for (std::size_t d = 2; d <= 8; ++d) {
    invariants::SuiteConfig cfg;
    cfg.d = d;
    cfg.random_z = 0;
    const auto r = invariants::hilbert_suite(cfg);
    INFO(invariants::format_result(r));
    CHECK(r.passed);
  }
}
