#include "kernels.hpp"

namespace g2::batch::detail {

void horner_scalar(std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs, const std::uint32_t* xs,
                   std::size_t n, std::uint32_t* out) {
  for (int k = 0; k < npoly; ++k) {
    const std::uint32_t* c = coeffs + static_cast<std::size_t>(k) * (degree + 1);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = c[degree];
      for (int d = degree - 1; d >= 0; --d) acc = (acc * xs[j] + c[d]) % p;
      out[static_cast<std::size_t>(k) * n + j] = static_cast<std::uint32_t>(acc);
    }
  }
}

}  // namespace g2::batch::detail
