#include "heis/simd.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace heis::simd::detail {

bool avx2_compiled() { return true; }

namespace {

// Lane k of the combine must see exactly the elements i with i%4==k plus
// tail element k, to match the scalar reference.
inline double combine(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

inline __m256d load_tail(const double* x, std::size_t rem) {
  alignas(32) double buf[4] = {0, 0, 0, 0};
  for (std::size_t k = 0; k < rem; ++k) buf[k] = x[k];
  return _mm256_load_pd(buf);
}

}  // namespace

double reduce_add_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4)
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  if (std::size_t rem = n - n4)
    acc = _mm256_add_pd(acc, load_tail(x + n4, rem));
  return combine(acc);
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  if (std::size_t rem = n - n4)
    acc = _mm256_fmadd_pd(load_tail(x + n4, rem), load_tail(y + n4, rem), acc);
  return combine(acc);
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, vy);
  }
  for (std::size_t i = n4; i < n; ++i) y[i] = __builtin_fma(a, x[i], y[i]);
}

}  // namespace heis::simd::detail

#else

namespace heis::simd::detail {
bool avx2_compiled() { return false; }
double reduce_add_avx2(const double* x, std::size_t n) { return reduce_add_scalar(x, n); }
double dot_avx2(const double* x, const double* y, std::size_t n) { return dot_scalar(x, y, n); }
void axpy_avx2(double a, const double* x, double* y, std::size_t n) { axpy_scalar(a, x, y, n); }
}  // namespace heis::simd::detail

#endif
