#include <cmath>
#include <vector>

#include "doctest.h"
#include "zbargmann/kernels.hpp"
#include "zbargmann/random.hpp"

using namespace zbargmann;

namespace {

std::vector<cplx> draw(std::size_t n, CounterRng& rng) {
  std::vector<cplx> v(n);
  for (auto& e : v) e = random::complex_normal(rng);
  return v;
}

double close(cplx a, cplx b, double scale) { return std::abs(a - b) / std::max(1.0, scale); }

}  // namespace

TEST_CASE("scalar kernels against plain loops") {
  const auto& k = kernels::scalar_table();
  CounterRng rng(3, 1);
  for (std::size_t n : {0u, 1u, 2u, 5u, 16u}) {
    const auto x = draw(n, rng), y0 = draw(n, rng);
    cplx du = 0.0, dc = 0.0;
    double as = 0.0, ns = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      du += x[i] * y0[i];
      dc += std::conj(x[i]) * y0[i];
      as += std::abs(x[i]);
      ns += std::norm(x[i]);
    }
    CHECK(close(k.dotu(n, x.data(), y0.data()), du, 1.0) < 1e-14);
    CHECK(close(k.dotc(n, x.data(), y0.data()), dc, 1.0) < 1e-14);
    CHECK(k.abs_sum(n, x.data()) == doctest::Approx(as).epsilon(1e-14));
    CHECK(k.norm_sq(n, x.data()) == doctest::Approx(ns).epsilon(1e-14));
    auto y = y0;
    const cplx alpha{0.3, -1.2};
    k.axpy(n, alpha, x.data(), y.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - (y0[i] + alpha * x[i])) < 1e-14);
  }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const kernels::Table* v = kernels::avx2_table();
  if (!v) {
    MESSAGE("AVX2 variant not available on this machine; skipped");
    return;
  }
  const auto& s = kernels::scalar_table();
  CounterRng rng(4, 2);
  for (std::size_t n = 0; n <= 37; ++n) {
    const auto x = draw(n, rng), y0 = draw(n, rng);
    const double scale = std::sqrt(s.norm_sq(n, x.data()) * s.norm_sq(n, y0.data()));
    CHECK(close(v->dotu(n, x.data(), y0.data()), s.dotu(n, x.data(), y0.data()), scale) < 1e-14);
    CHECK(close(v->dotc(n, x.data(), y0.data()), s.dotc(n, x.data(), y0.data()), scale) < 1e-14);
    CHECK(v->abs_sum(n, x.data()) == doctest::Approx(s.abs_sum(n, x.data())).epsilon(1e-14));
    CHECK(v->norm_sq(n, x.data()) == doctest::Approx(s.norm_sq(n, x.data())).epsilon(1e-14));
    auto ys = y0, yv = y0;
    const cplx alpha{-0.7, 0.25};
    s.axpy(n, alpha, x.data(), ys.data());
    v->axpy(n, alpha, x.data(), yv.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ys[i] - yv[i]) < 1e-14);
  }
}

TEST_CASE("active table is one of the compiled variants") {
  const auto& a = kernels::active();
  CHECK((a.isa == kernels::Isa::scalar || a.isa == kernels::Isa::avx2));
  if (a.isa == kernels::Isa::avx2) CHECK(kernels::cpu_supports_avx2());
}
