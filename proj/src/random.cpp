#include "zbargmann/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zbargmann::random {

double normal(CounterRng& rng) {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx complex_normal(CounterRng& rng) {
  const double re = normal(rng);
  const double im = normal(rng);
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

UnitCirclePoint unit_circle(CounterRng& rng) {
  return UnitCirclePoint::from_angle(2.0 * std::numbers::pi * rng.uniform());
}

cplx unit_phase(CounterRng& rng) { return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform()); }

ComplexMatrix complex_matrix(std::size_t n, CounterRng& rng) {
  ComplexMatrix m(n);
  for (auto& z : m.data()) z = complex_normal(rng);
  return m;
}

ComplexMatrix hermitian(std::size_t n, CounterRng& rng) {
  const ComplexMatrix g = complex_matrix(n, rng);
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  // exact symmetry on the diagonal and across it
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = h(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) h(c, r) = std::conj(h(r, c));
  }
  return h;
}

ComplexMatrix unitary(std::size_t n, CounterRng& rng) {
  ComplexMatrix q = complex_matrix(n, rng);
  // modified Gram-Schmidt over columns
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj{};
      for (std::size_t r = 0; r < n; ++r) proj += std::conj(q(r, j)) * q(r, k);
      for (std::size_t r = 0; r < n; ++r) q(r, k) -= proj * q(r, j);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(q(r, k));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < n; ++r) q(r, k) /= nrm;
  }
  return q;
}

Ket complex_ket(std::size_t n, CounterRng& rng) {
  Ket k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = complex_normal(rng);
  return k;
}

Ket unit_ket(std::size_t n, CounterRng& rng) {
  Ket k = complex_ket(n, rng);
  k *= 1.0 / k.norm();
  return k;
}

ComplexMatrix density(std::size_t n, CounterRng& rng) {
  const ComplexMatrix g = complex_matrix(n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  for (std::size_t r = 0; r < n; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return rho;
}

ComplexMatrix rescaling(std::size_t n, CounterRng& rng) {
  ComplexMatrix m = complex_matrix(n, rng);
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (const auto& z : m.row(r)) s += std::norm(z);
    worst = std::max(worst, std::sqrt(s));
  }
  m *= 1.0 / worst;
  return m;
}

}  // namespace zbargmann::random
