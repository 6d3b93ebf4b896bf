#pragma once

// Complex double inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the variant is picked once at first use from the
// CPU feature bits. Setting ZBARGMANN_KERNELS=scalar in the environment forces
// the reference path.

#include <complex>
#include <cstddef>
#include <span>

namespace zbargmann::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct Table {
  Isa isa;
  const char* name;
  // y += alpha * x
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
  // sum_i x_i * y_i
  cplx (*dotu)(std::size_t n, const cplx* x, const cplx* y);
  // sum_i conj(x_i) * y_i
  cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
  // sum_i |x_i|
  double (*abs_sum)(std::size_t n, const cplx* x);
  // sum_i |x_i|^2
  double (*norm_sq)(std::size_t n, const cplx* x);
};

const Table& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks AVX2.
const Table* avx2_table();

const Table& active();

bool cpu_supports_avx2();

inline void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  active().axpy(x.size(), alpha, x.data(), y.data());
}

inline cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotu(x.size(), x.data(), y.data());
}

inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotc(x.size(), x.data(), y.data());
}

inline double abs_sum(std::span<const cplx> x) {
  return active().abs_sum(x.size(), x.data());
}

inline double norm_sq(std::span<const cplx> x) {
  return active().norm_sq(x.size(), x.data());
}

}  // namespace zbargmann::kernels
