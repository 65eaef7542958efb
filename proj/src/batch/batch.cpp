#include "g2/batch.hpp"

#include <algorithm>

#include "g2/arith.hpp"
#include "g2/error.hpp"
#include "g2/igusa_tables.hpp"
#include "kernels.hpp"

namespace g2::batch {

namespace {

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t p) { return arith::powmod(x, p - 2, p); }

std::uint64_t reduce_signed(std::int64_t c, std::uint64_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

void check_prime(std::uint32_t p) {
  if (p <= 2 || p >= kMaxPrime || !arith::is_prime_u64(p))
    throw Error(Errc::BadParameter, "batch kernel needs an odd prime below 2^25, got " + std::to_string(p));
}

// Table terms mod p with the power-of-two divisor folded into the coefficient.
struct ReducedTerm {
  std::array<std::uint8_t, 7> e;
  std::uint64_t c;
};

std::array<std::vector<ReducedTerm>, 4> reduced_tables(std::uint32_t p) {
  std::array<std::vector<ReducedTerm>, 4> out;
  for (int k = 0; k < 4; ++k) {
    const igusa::Table& t = igusa::kTables[k];
    std::uint64_t scale = inverse_mod(arith::powmod(2, static_cast<std::uint64_t>(t.log2_divisor), p), p);
    for (std::size_t i = 0; i < t.size; ++i) {
      std::uint64_t c = reduce_signed(t.terms[i].c, p) * scale % p;
      if (c) out[k].push_back({t.terms[i].e, c});
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(G2_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(G2_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

void horner_mod_p(Isa isa, std::uint32_t p, int npoly, int degree, const std::uint32_t* coeffs,
                  const std::uint32_t* xs, std::size_t n, std::uint32_t* out) {
  if (p <= 2 || p >= kMaxPrime) throw Error(Errc::BadParameter, "modulus outside the kernel range");
  if (npoly < 0 || degree < 0) throw Error(Errc::BadParameter, "negative polynomial count or degree");
  if (!isa_available(isa)) throw Error(Errc::Unsupported, std::string(to_string(isa)) + " is not available");
  switch (isa) {
    case Isa::Scalar: detail::horner_scalar(p, npoly, degree, coeffs, xs, n, out); return;
#if defined(G2_HAVE_AVX2)
    case Isa::Avx2: detail::horner_avx2(p, npoly, degree, coeffs, xs, n, out); return;
#endif
#if defined(G2_HAVE_NEON)
    case Isa::Neon: detail::horner_neon(p, npoly, degree, coeffs, xs, n, out); return;
#endif
    default: break;
  }
  throw Error(Errc::Unsupported, "kernel variant not built");
}

std::array<std::uint32_t, 4> igusa_mod_p(std::uint32_t p, const std::array<std::uint32_t, 7>& a) {
  check_prime(p);
  auto tables = reduced_tables(p);
  std::array<std::array<std::uint64_t, 11>, 7> pw;
  for (int i = 0; i < 7; ++i) {
    pw[i][0] = 1;
    for (int e = 1; e <= 10; ++e) pw[i][e] = pw[i][e - 1] * (a[i] % p) % p;
  }
  std::array<std::uint32_t, 4> out{};
  for (int k = 0; k < 4; ++k) {
    std::uint64_t acc = 0;
    for (const ReducedTerm& t : tables[k]) {
      std::uint64_t m = t.c;
      for (int i = 0; i < 7; ++i) m = m * pw[i][t.e[i]] % p;
      acc = (acc + m) % p;
    }
    out[k] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

std::int64_t point_index(std::uint32_t p, const std::array<std::uint32_t, 4>& j) {
  const std::uint64_t P = p;
  const std::uint64_t J2 = j[0], J4 = j[1], J6 = j[2], J10 = j[3];
  if (J10 == 0) return -1;
  const std::uint64_t inv10 = inverse_mod(J10, P);
  auto pw = [P](std::uint64_t x, std::uint64_t e) { return arith::powmod(x, e, P); };
  std::uint64_t j1 = 0, j2 = 0, j3 = 0;
  if (J2) {
    j1 = pw(J2, 5) * inv10 % P;
    j2 = pw(J2, 3) * J4 % P * inv10 % P;
    j3 = J2 * J2 % P * J6 % P * inv10 % P;
  } else if (J4) {
    j2 = pw(J4, 5) * inv10 % P * inv10 % P;
    j3 = J4 * J6 % P * inv10 % P;
  } else {
    j3 = pw(J6, 5) * pw(inv10, 3) % P;
  }
  return static_cast<std::int64_t>((j1 * P + j2) * P + j3);
}

std::uint64_t Enumeration::points() const { return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true)); }

Enumeration enumerate_moduli_points(std::uint32_t p, Isa isa) {
  check_prime(p);
  if (p > 31) throw Error(Errc::BadParameter, "exhaustive enumeration is limited to p <= 31");
  const std::uint64_t P = p;
  const auto tables = reduced_tables(p);
  int degree = 0;
  for (const auto& t : tables)
    for (const ReducedTerm& term : t) degree = std::max<int>(degree, term.e[6]);
  const int width = degree + 1;

  Enumeration out;
  out.p = p;
  out.hit.assign(static_cast<std::size_t>(P * P * P), false);
  std::vector<std::uint32_t> xs(p), coeffs(4 * static_cast<std::size_t>(width)), vals(4 * static_cast<std::size_t>(p));
  for (std::uint32_t x = 0; x < p; ++x) xs[x] = x;

  // Power tables for a0..a5; a6 is the kernel variable.
  std::array<std::array<std::uint64_t, 11>, 6> pw;
  auto set_coeff = [&](int i, std::uint64_t v) {
    pw[i][0] = 1;
    for (int e = 1; e <= 10; ++e) pw[i][e] = pw[i][e - 1] * v % P;
  };
  auto visit = [&]() {
    std::fill(coeffs.begin(), coeffs.end(), 0u);
    for (int k = 0; k < 4; ++k) {
      std::uint32_t* c = coeffs.data() + static_cast<std::size_t>(k) * width;
      for (const ReducedTerm& t : tables[k]) {
        std::uint64_t m = t.c;
        for (int i = 0; i < 6 && m; ++i) m = m * pw[i][t.e[i]] % P;
        c[t.e[6]] = static_cast<std::uint32_t>((c[t.e[6]] + m) % P);
      }
    }
    horner_mod_p(isa, p, 4, degree, coeffs.data(), xs.data(), p, vals.data());
    for (std::uint32_t x = 0; x < p; ++x) {
      std::int64_t idx = point_index(p, {vals[x], vals[p + x], vals[2 * p + x], vals[3 * p + x]});
      if (idx < 0) continue;
      ++out.curves;
      out.hit[static_cast<std::size_t>(idx)] = true;
    }
  };
  // Form index i carries x^(6-i): monic sextics have a0 = 1, monic quintics
  // a0 = 0 and a1 = 1.
  for (int quintic = 0; quintic < 2; ++quintic) {
    set_coeff(0, quintic ? 0 : 1);
    const int first_free = quintic ? 2 : 1;
    if (quintic) set_coeff(1, 1);
    std::array<std::uint32_t, 6> a{};
    const int free = 6 - first_free;
    std::uint64_t combos = 1;
    for (int i = 0; i < free; ++i) combos *= P;
    for (std::uint64_t m = 0; m < combos; ++m) {
      std::uint64_t r = m;
      for (int i = 5; i >= first_free; --i) {
        a[i] = static_cast<std::uint32_t>(r % P);
        r /= P;
        set_coeff(i, a[i]);
      }
      visit();
    }
  }
  return out;
}

}  // namespace g2::batch
