#include "g2/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "g2/error.hpp"

namespace g2::arith {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Brent's variant; returns a nontrivial factor or nullopt after the budget.
std::optional<mpz_class> rho_split(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return mpz_class(2);
  constexpr unsigned long kBudget = 1ul << 22;
  for (unsigned long c = 1; c <= 12; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys, t;
    unsigned long r = 1, steps = 0;
    const unsigned long m = 128;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1 && steps < kBudget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          t = x - y;
          q = (q * abs(t)) % n;
        }
        g = gcd(q, n);
        k += m;
        steps += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        f(ys);
        t = x - ys;
        g = gcd(abs(t), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    // Exhausted budget: another constant is no more likely to succeed.
    if (g == 1) break;
  }
  return std::nullopt;
}

void factor_rest(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long k = 2; k <= 7; ++k) {
    mpz_class root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), k);
    if (rem != 0) continue;
    std::map<mpz_class, unsigned> sub;
    factor_rest(root, sub);
    for (const auto& [q, e] : sub) out[q] += e * static_cast<unsigned>(k);
    return;
  }
  auto d = rho_split(n);
  if (!d) throw Error(Errc::FactorizationLimit, "cannot factor " + n.get_str());
  factor_rest(*d, out);
  factor_rest(mpz_class(n / *d), out);
}

}  // namespace

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t r;
  if (p % 4 == 3) {
    r = powmod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    r = powmod(a, (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
      r = mulmod(r, b, p);
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      m = i;
    }
  }
  return std::min(r, p - r);
}

std::optional<mpz_class> sqrt_mod(const mpz_class& a_in, const mpz_class& p) {
  if (mpz_fits_ulong_p(p.get_mpz_t())) {
    mpz_class a = a_in % p;
    if (a < 0) a += p;
    auto r = sqrt_mod(a.get_ui(), p.get_ui());
    if (!r) return std::nullopt;
    return mpz_class(static_cast<unsigned long>(*r));
  }
  mpz_class a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return mpz_class(0);
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  mpz_class q = p - 1, r, e;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c, t, b;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  mpz_class other = p - r;
  return r < other ? r : other;
}

int legendre(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

Factorization factorize(const mpz_class& n_in) {
  if (n_in == 0) throw Error(Errc::BadParameter, "factorize(0)");
  mpz_class n = abs(n_in);
  std::map<mpz_class, unsigned> found;
  for (std::uint32_t p : small_primes()) {
    if (mpz_class(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      found[mpz_class(p)] = e;
    }
  }
  factor_rest(n, found);
  return {found.begin(), found.end()};
}

SquarefreeSplit squarefree_split(const mpz_class& n) {
  if (n == 0) return {mpz_class(0), mpz_class(0)};
  SquarefreeSplit out{mpz_class(1), mpz_class(sgn(n))};
  for (const auto& [p, e] : factorize(n)) {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
    out.square *= pk;
    if (e % 2) out.core *= p;
  }
  return out;
}

std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& m) {
  mpz_class modulus = abs(m);
  if (modulus <= 1) return mpz_class(0);
  mpz_class x = 0, acc = 1;
  for (const auto& [p, e] : factorize(modulus)) {
    auto r = sqrt_mod(a, p);
    if (!r) return std::nullopt;
    // CRT: x = x mod acc, x = r mod p.
    mpz_class inv;
    mpz_class accmod = acc % p;
    mpz_invert(inv.get_mpz_t(), accmod.get_mpz_t(), p.get_mpz_t());
    mpz_class k = ((*r - x) % p) * inv % p;
    if (k < 0) k += p;
    x += acc * k;
    acc *= p;
  }
  return x;
}

}  // namespace g2::arith
