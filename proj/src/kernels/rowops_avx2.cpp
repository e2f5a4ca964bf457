#include "badred/kernels/rowops.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace badred::kernels::avx2 {

namespace {

// t in [0, 2^53) exactly representable; returns t mod p for 4 lanes.
__attribute__((target("avx2,fma"))) inline __m256d reduce_pd(__m256d t, __m256d vp, __m256d vinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, t);
  // quotient may be off by one either way
  __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
  return r;
}

}  // namespace

__attribute__((target("avx2,fma"))) void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src,
                                                       std::uint32_t f, std::size_t n, std::uint32_t p) {
  if (f == 0) return;
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(f));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // entries are < 2^31, so the signed conversion is exact
    __m256d dlo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(d));
    __m256d dhi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(d, 1));
    __m256d slo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(s));
    __m256d shi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(s, 1));
    __m256d rlo = reduce_pd(_mm256_fmadd_pd(vf, slo, dlo), vp, vinv);
    __m256d rhi = reduce_pd(_mm256_fmadd_pd(vf, shi, dhi), vp, vinv);
    __m128i olo = _mm256_cvttpd_epi32(rlo);
    __m128i ohi = _mm256_cvttpd_epi32(rhi);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_set_m128i(ohi, olo));
  }
  scalar::row_axpy_mod(dst + i, src + i, f, n - i, p);
}

__attribute__((target("avx2,fma"))) void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n,
                                                        std::uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(f));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(r));
    __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(r, 1));
    __m128i olo = _mm256_cvttpd_epi32(reduce_pd(_mm256_mul_pd(vf, lo), vp, vinv));
    __m128i ohi = _mm256_cvttpd_epi32(reduce_pd(_mm256_mul_pd(vf, hi), vp, vinv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), _mm256_set_m128i(ohi, olo));
  }
  scalar::row_scale_mod(row + i, f, n - i, p);
}

}  // namespace badred::kernels::avx2
#endif
