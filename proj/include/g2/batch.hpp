#pragma once

// Word-size arithmetic mod small primes for exhaustive curve enumeration:
// a batched polynomial evaluator with scalar, AVX2 and NEON variants and the
// enumeration of all moduli points of monic squarefree sextics and quintics.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace g2::batch {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);
bool isa_available(Isa isa);
// Widest variant the running CPU supports.
Isa best_isa();

// Moduli for the kernel: 2 < p < 2^25.
constexpr std::uint32_t kMaxPrime = 1u << 25;

// out[k * n + j] = sum_d coeffs[k * (degree + 1) + d] * xs[j]^d mod p, for
// npoly polynomials. Inputs are reduced mod p. Throws Unsupported for an ISA
// the CPU lacks and BadParameter for p outside the kernel range.
void horner_mod_p(Isa isa, std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs,
                  const std::uint32_t* xs, std::size_t n, std::uint32_t* out);

// J2, J4, J6, J10 mod p of the form a0 x1^6 + ... + a6 x2^6 (entries < p).
std::array<std::uint32_t, 4> igusa_mod_p(std::uint32_t p, const std::array<std::uint32_t, 7>& a);

// Index j1 p^2 + j2 p + j3 of the moduli point with those invariants, or -1
// when J10 = 0. Same branches as absolute_invariants.
std::int64_t point_index(std::uint32_t p, const std::array<std::uint32_t, 4>& j);

struct Enumeration {
  std::uint32_t p = 0;
  std::uint64_t curves = 0;    // squarefree monic sextics and quintics visited
  std::vector<bool> hit;       // by point_index
  std::uint64_t points() const;
};

// Every squarefree monic sextic and quintic over F_p.
Enumeration enumerate_moduli_points(std::uint32_t p, Isa isa = best_isa());

}  // namespace g2::batch
