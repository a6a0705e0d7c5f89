#ifndef LOGITFIELD_VEC_MATH_HPP
#define LOGITFIELD_VEC_MATH_HPP

#include <cmath>
#include <cstddef>

#if defined(__x86_64__) && defined(__AVX2__) && defined(__GLIBC__)
#define LOGITFIELD_HAVE_LIBMVEC 1
#include <immintrin.h>
extern "C" {
__m256d _ZGVdN4v_exp(__m256d);
__m256d _ZGVdN4v_log(__m256d);
#if defined(__AVX512F__)
__m512d _ZGVeN8v_exp(__m512d);
__m512d _ZGVeN8v_log(__m512d);
#endif
}
#endif

namespace logitfield::vecm {

// Elementwise b[i] = exp(a[i]) / log(a[i]) over buffers. Every element goes
// through the same code path (short tails via a padded lane), so outputs depend
// only on the input values, not on buffer length alignment or thread layout.

#if defined(LOGITFIELD_HAVE_LIBMVEC) && defined(__AVX512F__)

inline void vexp(const double* a, double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm512_storeu_pd(b + i, _ZGVeN8v_exp(_mm512_loadu_pd(a + i)));
  if (i < n) {
    alignas(64) double pad[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t k = i; k < n; ++k) pad[k - i] = a[k];
    alignas(64) double out[8];
    _mm512_store_pd(out, _ZGVeN8v_exp(_mm512_load_pd(pad)));
    for (std::size_t k = i; k < n; ++k) b[k] = out[k - i];
  }
}

inline void vlog(const double* a, double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm512_storeu_pd(b + i, _ZGVeN8v_log(_mm512_loadu_pd(a + i)));
  if (i < n) {
    alignas(64) double pad[8] = {1, 1, 1, 1, 1, 1, 1, 1};
    for (std::size_t k = i; k < n; ++k) pad[k - i] = a[k];
    alignas(64) double out[8];
    _mm512_store_pd(out, _ZGVeN8v_log(_mm512_load_pd(pad)));
    for (std::size_t k = i; k < n; ++k) b[k] = out[k - i];
  }
}

#elif defined(LOGITFIELD_HAVE_LIBMVEC)

inline void vexp(const double* a, double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(b + i, _ZGVdN4v_exp(_mm256_loadu_pd(a + i)));
  if (i < n) {
    alignas(32) double pad[4] = {0, 0, 0, 0};
    for (std::size_t k = i; k < n; ++k) pad[k - i] = a[k];
    alignas(32) double out[4];
    _mm256_store_pd(out, _ZGVdN4v_exp(_mm256_load_pd(pad)));
    for (std::size_t k = i; k < n; ++k) b[k] = out[k - i];
  }
}

inline void vlog(const double* a, double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(b + i, _ZGVdN4v_log(_mm256_loadu_pd(a + i)));
  if (i < n) {
    alignas(32) double pad[4] = {1, 1, 1, 1};
    for (std::size_t k = i; k < n; ++k) pad[k - i] = a[k];
    alignas(32) double out[4];
    _mm256_store_pd(out, _ZGVdN4v_log(_mm256_load_pd(pad)));
    for (std::size_t k = i; k < n; ++k) b[k] = out[k - i];
  }
}

#else

inline void vexp(const double* a, double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) b[i] = std::exp(a[i]);
}

inline void vlog(const double* a, double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) b[i] = std::log(a[i]);
}

#endif

}  // namespace logitfield::vecm

#endif
