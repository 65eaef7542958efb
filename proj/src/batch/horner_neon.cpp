#include "kernels.hpp"

#include <arm_neon.h>

namespace g2::batch::detail {

namespace {

// t < 2^52 exactly representable; result in [0, p).
inline float64x2_t reduce(float64x2_t t, float64x2_t pv, float64x2_t inv) {
  float64x2_t q = vrndmq_f64(vmulq_f64(t, inv));
  float64x2_t r = vfmsq_f64(t, q, pv);
  uint64x2_t neg = vcltq_f64(r, vdupq_n_f64(0.0));
  r = vbslq_f64(neg, vaddq_f64(r, pv), r);
  uint64x2_t big = vcgeq_f64(r, pv);
  return vbslq_f64(big, vsubq_f64(r, pv), r);
}

}  // namespace

void horner_neon(std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs, const std::uint32_t* xs,
                 std::size_t n, std::uint32_t* out) {
  const float64x2_t pv = vdupq_n_f64(static_cast<double>(p));
  const float64x2_t inv = vdupq_n_f64(1.0 / static_cast<double>(p));
  const std::size_t vec_end = n & ~std::size_t(1);
  for (int k = 0; k < npoly; ++k) {
    const std::uint32_t* c = coeffs + static_cast<std::size_t>(k) * (degree + 1);
    std::uint32_t* o = out + static_cast<std::size_t>(k) * n;
    for (std::size_t j = 0; j < vec_end; j += 2) {
      float64x2_t x = vcvtq_f64_u64(vmovl_u32(vld1_u32(xs + j)));
      float64x2_t acc = vdupq_n_f64(static_cast<double>(c[degree]));
      for (int d = degree - 1; d >= 0; --d)
        acc = reduce(vfmaq_f64(vdupq_n_f64(static_cast<double>(c[d])), acc, x), pv, inv);
      vst1_u32(o + j, vmovn_u64(vcvtq_u64_f64(acc)));
    }
    if (vec_end < n) horner_scalar(p, 1, degree, c, xs + vec_end, n - vec_end, o + vec_end);
  }
}

}  // namespace g2::batch::detail
