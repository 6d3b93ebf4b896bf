#include <cmath>

#include "kernels_internal.hpp"

namespace zbargmann::kernels::detail {
namespace {

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double abs_sum_scalar(std::size_t n, const cplx* x) {
  double acc = 0.0;
  // std::abs uses hypot; the plain sqrt matches the vector path's rounding.
  for (std::size_t i = 0; i < n; ++i) acc += std::sqrt(std::norm(x[i]));
  return acc;
}

double norm_sq_scalar(std::size_t n, const cplx* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

}  // namespace

const Table kScalarTable{Isa::scalar,   "scalar",       axpy_scalar,   dotu_scalar,
                         dotc_scalar,   abs_sum_scalar, norm_sq_scalar};

}  // namespace zbargmann::kernels::detail
