#pragma once

#include <cstddef>
#include <cstdint>

namespace g2::batch::detail {

// Same contract as horner_mod_p; arguments already validated.
void horner_scalar(std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs, const std::uint32_t* xs,
                   std::size_t n, std::uint32_t* out);
void horner_avx2(std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs, const std::uint32_t* xs,
                 std::size_t n, std::uint32_t* out);
void horner_neon(std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs, const std::uint32_t* xs,
                 std::size_t n, std::uint32_t* out);

}  // namespace g2::batch::detail
