#include "badred/kernels/rowops.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace badred::kernels::neon {

namespace {

inline float64x2_t reduce_pd(float64x2_t t, float64x2_t vp, float64x2_t vinv) {
  float64x2_t q = vrndmq_f64(vmulq_f64(t, vinv));
  float64x2_t r = vfmsq_f64(t, q, vp);
  uint64x2_t neg = vcltq_f64(r, vdupq_n_f64(0.0));
  r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(vp))));
  uint64x2_t big = vcgeq_f64(r, vp);
  r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(big, vreinterpretq_u64_f64(vp))));
  return r;
}

inline uint32x4_t combine(float64x2_t lo, float64x2_t hi) {
  return vcombine_u32(vmovn_u64(vcvtq_u64_f64(lo)), vmovn_u64(vcvtq_u64_f64(hi)));
}

}  // namespace

void row_axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n, std::uint32_t p) {
  if (f == 0) return;
  const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
  const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const float64x2_t vf = vdupq_n_f64(static_cast<double>(f));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t d = vld1q_u32(dst + i);
    uint32x4_t s = vld1q_u32(src + i);
    float64x2_t dlo = vcvtq_f64_u64(vmovl_u32(vget_low_u32(d)));
    float64x2_t dhi = vcvtq_f64_u64(vmovl_u32(vget_high_u32(d)));
    float64x2_t slo = vcvtq_f64_u64(vmovl_u32(vget_low_u32(s)));
    float64x2_t shi = vcvtq_f64_u64(vmovl_u32(vget_high_u32(s)));
    float64x2_t rlo = reduce_pd(vfmaq_f64(dlo, vf, slo), vp, vinv);
    float64x2_t rhi = reduce_pd(vfmaq_f64(dhi, vf, shi), vp, vinv);
    vst1q_u32(dst + i, combine(rlo, rhi));
  }
  scalar::row_axpy_mod(dst + i, src + i, f, n - i, p);
}

void row_scale_mod(std::uint32_t* row, std::uint32_t f, std::size_t n, std::uint32_t p) {
  const float64x2_t vp = vdupq_n_f64(static_cast<double>(p));
  const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const float64x2_t vf = vdupq_n_f64(static_cast<double>(f));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t r = vld1q_u32(row + i);
    float64x2_t lo = vcvtq_f64_u64(vmovl_u32(vget_low_u32(r)));
    float64x2_t hi = vcvtq_f64_u64(vmovl_u32(vget_high_u32(r)));
    vst1q_u32(row + i, combine(reduce_pd(vmulq_f64(vf, lo), vp, vinv), reduce_pd(vmulq_f64(vf, hi), vp, vinv)));
  }
  scalar::row_scale_mod(row + i, f, n - i, p);
}

}  // namespace badred::kernels::neon
#endif
