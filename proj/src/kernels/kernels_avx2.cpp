#include <immintrin.h>

#include <cmath>

#include "kernels_internal.hpp"

// Complex values are stored interleaved (re, im); one __m256d holds two of them.

namespace zbargmann::kernels::detail {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

inline cplx hsum_complex(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = as_doubles(x);
  const double* yd = as_doubles(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d yre = _mm256_movedup_pd(yv);
    const __m256d yim = _mm256_permute_pd(yv, 0b1111);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);
    acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(xv, yre, _mm256_mul_pd(xs, yim)));
  }
  cplx sum = hsum_complex(acc);
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = as_doubles(x);
  const double* yd = as_doubles(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d yre = _mm256_movedup_pd(yv);
    const __m256d yim = _mm256_permute_pd(yv, 0b1111);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);
    // even lanes: xi*yi + xr*yr, odd lanes: xr*yi - xi*yr
    acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(xs, yim, _mm256_mul_pd(xv, yre)));
  }
  cplx sum = hsum_complex(acc);
  for (; i < n; ++i) sum += std::conj(x[i]) * y[i];
  return sum;
}

double abs_sum_avx2(std::size_t n, const cplx* x) {
  const double* xd = as_doubles(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(xd + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(xd + 2 * i + 4);
    const __m256d m = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(m));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += std::sqrt(std::norm(x[i]));
  return sum;
}

double norm_sq_avx2(std::size_t n, const cplx* x) {
  const double* xd = as_doubles(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += std::norm(x[i]);
  return sum;
}

}  // namespace

const Table kAvx2Table{Isa::avx2,  "avx2",       axpy_avx2,   dotu_avx2,
                       dotc_avx2,  abs_sum_avx2, norm_sq_avx2};

}  // namespace zbargmann::kernels::detail
