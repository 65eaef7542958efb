#pragma once

// Integer number theory used by the field and conic code.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace g2::arith {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
bool is_prime_u64(std::uint64_t n);
bool is_probable_prime(const mpz_class& n);

// Square root modulo an odd prime; least nonnegative root.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& p);

// +1, -1 or 0.
int legendre(const mpz_class& a, const mpz_class& p);

using Factorization = std::vector<std::pair<mpz_class, unsigned>>;

// Prime factorization of |n| (n != 0), primes ascending. Trial division to
// 10^6, then Pollard rho; throws FactorizationLimit when rho gives up.
Factorization factorize(const mpz_class& n);

// n = square^2 * core with core squarefree (sign carried by core).
struct SquarefreeSplit {
  mpz_class square;
  mpz_class core;
};
SquarefreeSplit squarefree_split(const mpz_class& n);

// x with x^2 = a mod |m|, m squarefree and a a square modulo each prime factor.
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& m);

}  // namespace g2::arith
