#pragma once

// Even-degree invariants as exact polynomials in a weighted basis
// (c2, c4, c6, c10) or (J2, J4, J6, J10), found by interpolation over random
// integral sextics, plus the persisted collection of those the
// reconstruction needs.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "g2/binary_form.hpp"
#include "g2/conic.hpp"
#include "g2/invariants.hpp"

namespace g2 {

enum class Basis { Clebsch, Igusa };

// sum coeff * b2^e0 b4^e1 b6^e2 b10^e3, times R when r_power = 1. Every
// exponent vector has weight 2e0 + 4e1 + 6e2 + 10e3 = degree - 15 r_power.
class InvariantExpression {
 public:
  struct Term {
    std::array<int, 4> e;
    mpq_class coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  InvariantExpression() = default;
  InvariantExpression(Basis basis, int degree, int r_power, std::vector<Term> terms);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  int r_power() const { return r_power_; }
  int cofactor_degree() const { return degree_ - 15 * r_power_; }
  const std::vector<Term>& terms() const { return terms_; }

  // No coefficient denominator is divisible by p (always true for p = 0).
  bool reduces_exactly(std::uint32_t p) const;
  // Exact value of the cofactor (R excluded). Throws MissingCache when a
  // denominator vanishes in the field of `vals`.
  Elem eval(const std::array<Elem, 4>& vals) const;
  // Value of the primitive integral multiple of the cofactor. Throws
  // MissingCache when that multiple vanishes identically mod p.
  Elem eval_cleared(const std::array<Elem, 4>& vals) const;

  std::string to_string() const;
  friend bool operator==(const InvariantExpression&, const InvariantExpression&) = default;

 private:
  Basis basis_ = Basis::Clebsch;
  int degree_ = 0;
  int r_power_ = 0;
  std::vector<Term> terms_;
};

// Exponent vectors of weight `degree` for weights (2, 4, 6, 10), lexicographic.
std::vector<std::array<int, 4>> weighted_monomials(int degree);

// mt19937_64 with a uniform draw that has the same output on every standard
// library (std::uniform_int_distribution does not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 eng_;
};

using FormEvaluator = std::function<Elem(const BinaryForm&)>;

struct DeriveOptions {
  Basis basis = Basis::Clebsch;
  // Target = cofactor * R with R = r_invariant.
  int r_power = 0;
  long box = 20;
  int fresh_checks = 10;
};

// Throws NotAnInvariant when the fitted expression fails on fresh samples or
// the system is inconsistent, DegreeMismatch when target(2F) != 2^deg target(F).
InvariantExpression derive_expression(const FormEvaluator& target, int degree, Rng& rng,
                                      const DeriveOptions& opts = {});

class ExpressionCache {
 public:
  static constexpr int kFormatVersion = 1;
  static const char* normalization_tag() { return "transvectant-classical-factorial"; }

  const InvariantExpression& get(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.contains(name); }
  void put(const std::string& name, InvariantExpression e) { entries_[name] = std::move(e); }
  const std::map<std::string, InvariantExpression>& entries() const { return entries_; }

  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

  std::string to_json() const;
  // Throws ParseError on malformed input or a version/tag mismatch.
  static ExpressionCache from_json(const std::string& text);
  friend bool operator==(const ExpressionCache&, const ExpressionCache&) = default;

  // Compares `samples` random sextics against every entry's defining oracle;
  // throws VerificationFailed on disagreement.
  void verify(Rng& rng, int samples) const;

 private:
  std::uint64_t seed_ = 0;
  std::map<std::string, InvariantExpression> entries_;
};

// Names: A_ij, a_ijk (i <= j <= k) for Mestre's conic and cubic on the
// transvectant scale; Abar_ij, abar_ijk on the scale of v4_conic_cubic_data;
// Rsq and Rsq_J (R^2 in the two bases); c_from_J.c2 .. c_from_J.c10 and
// J_from_c.J2 .. J_from_c.J10.
std::vector<std::string> cache_entry_names();

// Direct transvectant value of a named cache entry at F (characteristic 0 or
// p > 5).
Elem expression_oracle(const std::string& name, const BinaryForm& f);

// Derives every entry; Abar/abar are checked against v4_conic_cubic_data and a
// mismatch throws VerificationFailed.
ExpressionCache cache_bootstrap(std::uint64_t seed = 1);

// Process-wide cache. Loaded from the configured path when the file exists
// (and verified on a few samples); otherwise bootstrapped once and written
// there. Path comes from set_cache_path, else the G2_CACHE environment
// variable, else none (in-memory only).
const ExpressionCache& expression_cache();
void set_cache_path(const std::string& path);

// Mestre's conic L (A) and cubic M (a) at the Clebsch values of J.
// Throws SmallCharacteristic for characteristic 3 and 5.
ConicCubicData mestre_data_from_invariants(const IgusaVector& j);
ClebschVector clebsch_from_igusa(const IgusaVector& j);

}  // namespace g2
