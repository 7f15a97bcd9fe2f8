#include "parabolica/simd/mod_kernels.hpp"

#if defined(PARABOLICA_HAVE_AVX2_TU)

#include <immintrin.h>

namespace parabolica::simd::detail {

namespace {

// Reduces four exact integers (held as doubles, all < 2^53) modulo p.
// The quotient estimate floor(x / p) can be off by one either way, so the
// remainder is corrected into [0, p) with two masked adds.
inline __m256d reduce(__m256d x, __m256d vp, __m256d vinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, vp));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
  return r;
}

inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvttpd_epi32(v));
}

}  // namespace

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
               std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d a0 = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(vf, load4(src + i)));
    const __m256d a1 = _mm256_add_pd(load4(dst + i + 4), _mm256_mul_pd(vf, load4(src + i + 4)));
    store4(dst + i, reduce(a0, vp, vinv));
    store4(dst + i + 4, reduce(a1, vp, vinv));
  }
  for (; i + 4 <= n; i += 4)
    store4(dst + i, reduce(_mm256_add_pd(load4(dst + i), _mm256_mul_pd(vf, load4(src + i))), vp, vinv));
  if (i < n) axpy_scalar(dst + i, src + i, n - i, factor, p);
}

void scale_avx2(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(row + i, reduce(_mm256_mul_pd(vf, load4(row + i)), vp, vinv));
  if (i < n) scale_scalar(row + i, n - i, factor, p);
}

}  // namespace parabolica::simd::detail

#endif
