// Compiled with -mavx2; only called after the dispatcher has checked CPUID.

#include "ksec/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <limits>

namespace ksec::kernels::avx2 {

namespace {
constexpr std::size_t kLanes = 4;

double horizontal_sum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}
}  // namespace

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + kLanes);
    y0 = _mm256_add_pd(y0, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    y1 = _mm256_add_pd(y1, _mm256_mul_pd(va, _mm256_loadu_pd(x + i + kLanes)));
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + kLanes, y1);
  }
  for (; i + kLanes <= n; i += kLanes) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    y0 = _mm256_add_pd(y0, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, y0);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double max_value(const double* x, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= kLanes) {
    __m256d vbest = _mm256_set1_pd(best);
    for (; i + kLanes <= n; i += kLanes) vbest = _mm256_max_pd(vbest, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[kLanes];
    _mm256_store_pd(lanes, vbest);
    best = *std::max_element(lanes, lanes + kLanes);
  }
  for (; i < n; ++i)
    if (x[i] > best) best = x[i];
  return best;
}

Moments moments(const double* x, std::size_t n) {
  __m256d s = _mm256_setzero_pd();
  __m256d q = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    s = _mm256_add_pd(s, v);
    q = _mm256_add_pd(q, _mm256_mul_pd(v, v));
  }
  Moments m{horizontal_sum(s), horizontal_sum(q)};
  for (; i < n; ++i) {
    m.sum += x[i];
    m.sumSquares += x[i] * x[i];
  }
  return m;
}

}  // namespace ksec::kernels::avx2
