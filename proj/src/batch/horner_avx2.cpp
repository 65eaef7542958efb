#include "kernels.hpp"

#include <immintrin.h>

namespace g2::batch::detail {

namespace {

// t < 2^52 exactly representable; result in [0, p).
inline __m256d reduce(__m256d t, __m256d pv, __m256d inv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, inv));
  __m256d r = _mm256_fnmadd_pd(q, pv, t);
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), pv));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pv, _CMP_GE_OQ), pv));
  return r;
}

}  // namespace

void horner_avx2(std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs, const std::uint32_t* xs,
                 std::size_t n, std::uint32_t* out) {
  const __m256d pv = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const std::size_t vec_end = n & ~std::size_t(3);
  for (int k = 0; k < npoly; ++k) {
    const std::uint32_t* c = coeffs + static_cast<std::size_t>(k) * (degree + 1);
    std::uint32_t* o = out + static_cast<std::size_t>(k) * n;
    for (std::size_t j = 0; j < vec_end; j += 4) {
      __m256d x = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(xs + j)));
      __m256d acc = _mm256_set1_pd(static_cast<double>(c[degree]));
      for (int d = degree - 1; d >= 0; --d)
        acc = reduce(_mm256_fmadd_pd(acc, x, _mm256_set1_pd(static_cast<double>(c[d]))), pv, inv);
      _mm_storeu_si128(reinterpret_cast<__m128i*>(o + j), _mm256_cvttpd_epi32(acc));
    }
    if (vec_end < n) horner_scalar(p, 1, degree, c, xs + vec_end, n - vec_end, o + vec_end);
  }
}

}  // namespace g2::batch::detail
