#pragma once

// Brute-force reference for the Grothendieck supremum g of a small matrix,
// kept independent of the library: plain loops, no kernels, no RNG.
//
// With b fixed, the best a gives sum_r |(theta b)_r|, so only the phases of b
// are searched. b_0 = 1 (a global phase of b does not change the value), the
// other phases run over a 72-point grid, and the best grid points are then
// polished by alternating phase updates.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct Dense {
  std::size_t n;
  std::vector<cplx> e;  // row-major
  cplx at(std::size_t r, std::size_t c) const { return e[r * n + c]; }
};

inline double value_given_b(const Dense& t, const std::vector<cplx>& b) {
  double total = 0.0;
  for (std::size_t r = 0; r < t.n; ++r) {
    cplx y = 0.0;
    for (std::size_t s = 0; s < t.n; ++s) y += t.at(r, s) * b[s];
    total += std::abs(y);
  }
  return total;
}

inline cplx phase_of_conj(cplx y) {
  const double m = std::abs(y);
  return m > 0.0 ? std::conj(y) / m : cplx{1.0, 0.0};
}

inline double polish(const Dense& t, std::vector<cplx> b) {
  const std::size_t n = t.n;
  std::vector<cplx> a(n);
  double last = -1.0;
  for (int sweep = 0; sweep < 100000; ++sweep) {
    for (std::size_t r = 0; r < n; ++r) {
      cplx y = 0.0;
      for (std::size_t s = 0; s < n; ++s) y += t.at(r, s) * b[s];
      a[r] = phase_of_conj(y);
    }
    double v = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      cplx w = 0.0;
      for (std::size_t r = 0; r < n; ++r) w += a[r] * t.at(r, s);
      b[s] = phase_of_conj(w);
      v += std::abs(w);
    }
    if (v <= last + 1e-15 * std::max(1.0, v)) return std::max(v, last);
    last = v;
  }
  return last;
}

inline double g_by_grid(const Dense& t, int points = 72, std::size_t keep = 16) {
  const std::size_t n = t.n;
  const std::size_t free = n - 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < free; ++k) total *= static_cast<std::size_t>(points);

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(total);
  std::vector<cplx> b(n, 1.0);
  const double step = 2.0 * std::numbers::pi / points;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = 1; k < n; ++k) {
      b[k] = std::polar(1.0, step * static_cast<double>(rest % points));
      rest /= points;
    }
    scored.emplace_back(value_given_b(t, b), idx);
  }
  keep = std::min(keep, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end(),
                    [](const auto& x, const auto& y) { return x.first > y.first; });
  double best = 0.0;
  for (std::size_t j = 0; j < keep; ++j) {
    std::size_t rest = scored[j].second;
    for (std::size_t k = 1; k < n; ++k) {
      b[k] = std::polar(1.0, step * static_cast<double>(rest % points));
      rest /= points;
    }
    best = std::max({best, scored[j].first, polish(t, b)});
  }
  return best;
}

}  // namespace oracle
