#include "g2/expressions.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace g2 {

namespace {

const int kYDegree[3] = {3, 5, 7};
const int kYbarDegree[3] = {3, 5, 8};

Field Q() { return Field::rationals(); }

// Parsed entry name.
struct EntrySpec {
  enum Kind { Conic, Cubic, ConicBar, CubicBar, Rsq, RsqJ, CFromJ, JFromC } kind;
  std::array<int, 3> idx{};  // 0-based indices, or the target degree for conversions
};

EntrySpec parse_name(const std::string& name) {
  auto digits = [&](std::size_t from, std::size_t n) {
    std::array<int, 3> idx{};
    if (name.size() != from + n) throw Error(Errc::BadParameter, "unknown cache entry " + name);
    for (std::size_t i = 0; i < n; ++i) {
      int d = name[from + i] - '1';
      if (d < 0 || d > 2) throw Error(Errc::BadParameter, "unknown cache entry " + name);
      idx[i] = d;
    }
    return idx;
  };
  auto conversion = [&](const std::string& prefix, EntrySpec::Kind kind) {
    int deg = std::stoi(name.substr(prefix.size()));
    if (deg != 2 && deg != 4 && deg != 6 && deg != 10)
      throw Error(Errc::BadParameter, "unknown cache entry " + name);
    return EntrySpec{kind, {deg, 0, 0}};
  };
  if (name == "Rsq") return {EntrySpec::Rsq, {}};
  if (name == "Rsq_J") return {EntrySpec::RsqJ, {}};
  if (name.starts_with("c_from_J.c")) return conversion("c_from_J.c", EntrySpec::CFromJ);
  if (name.starts_with("J_from_c.J")) return conversion("J_from_c.J", EntrySpec::JFromC);
  if (name.starts_with("Abar_")) return {EntrySpec::ConicBar, digits(5, 2)};
  if (name.starts_with("abar_")) return {EntrySpec::CubicBar, digits(5, 3)};
  if (name.starts_with("A_")) return {EntrySpec::Conic, digits(2, 2)};
  if (name.starts_with("a_")) return {EntrySpec::Cubic, digits(2, 3)};
  throw Error(Errc::BadParameter, "unknown cache entry " + name);
}

struct EntryShape {
  Basis basis;
  int degree;
  int r_power;
};

EntryShape shape_of(const EntrySpec& s) {
  switch (s.kind) {
    case EntrySpec::Conic:
      return {Basis::Clebsch, kYDegree[s.idx[0]] + kYDegree[s.idx[1]], 0};
    case EntrySpec::Cubic:
      return {Basis::Clebsch, 1 + kYDegree[s.idx[0]] + kYDegree[s.idx[1]] + kYDegree[s.idx[2]], 0};
    case EntrySpec::ConicBar: {
      int d = kYbarDegree[s.idx[0]] + kYbarDegree[s.idx[1]];
      return {Basis::Clebsch, d, d % 2};
    }
    case EntrySpec::CubicBar: {
      int d = 1 + kYbarDegree[s.idx[0]] + kYbarDegree[s.idx[1]] + kYbarDegree[s.idx[2]];
      return {Basis::Clebsch, d, d % 2};
    }
    case EntrySpec::Rsq: return {Basis::Clebsch, 30, 0};
    case EntrySpec::RsqJ: return {Basis::Igusa, 30, 0};
    case EntrySpec::CFromJ: return {Basis::Igusa, s.idx[0], 0};
    case EntrySpec::JFromC: return {Basis::Clebsch, s.idx[0], 0};
  }
  throw Error(Errc::BadParameter, "entry shape");
}

Elem pick_c(const ClebschVector& c, int deg) {
  switch (deg) {
    case 2: return c.c2;
    case 4: return c.c4;
    case 6: return c.c6;
    default: return c.c10;
  }
}

Elem pick_j(const IgusaVector& j, int deg) {
  switch (deg) {
    case 2: return j.J2;
    case 4: return j.J4;
    case 6: return j.J6;
    default: return j.J10;
  }
}

std::array<Elem, 4> basis_values(Basis basis, const BinaryForm& f) {
  if (basis == Basis::Clebsch) {
    ClebschVector c = clebsch_invariants(f);
    return {c.c2, c.c4, c.c6, c.c10};
  }
  IgusaVector j = igusa_even(f);
  return {j.J2, j.J4, j.J6, j.J10};
}

std::vector<mpq_class> monomial_row(const std::vector<std::array<int, 4>>& monos,
                                    const std::array<Elem, 4>& vals) {
  std::vector<mpq_class> row;
  row.reserve(monos.size());
  for (const auto& m : monos) {
    mpq_class v = 1;
    for (int i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      mpq_class pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(vals[i].rational().get_mpq_t()), m[i]);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(vals[i].rational().get_mpq_t()), m[i]);
      v *= pw;
    }
    row.push_back(v);
  }
  return row;
}

BinaryForm random_sextic(Rng& rng, long box) {
  for (;;) {
    std::vector<Elem> c;
    for (int i = 0; i < 7; ++i) c.push_back(Q().from_int(rng.uniform(-box, box)));
    BinaryForm f(Q(), std::move(c));
    if (!form_discriminant(f).is_zero()) return f;
  }
}

// Incremental row echelon form over Q for an n-unknown system.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n), pivot_row_(n, -1) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns false when the row is inconsistent with those before it.
  bool add(std::vector<mpq_class> row, mpq_class rhs) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (sgn(row[c]) == 0 || pivot_row_[c] < 0) continue;
      const auto& [prow, prhs] = rows_[pivot_row_[c]];
      mpq_class f = row[c];
      for (std::size_t k = c; k < n_; ++k)
        if (sgn(prow[k]) != 0) row[k] -= f * prow[k];
      rhs -= f * prhs;
    }
    std::size_t lead = 0;
    while (lead < n_ && sgn(row[lead]) == 0) ++lead;
    if (lead == n_) return sgn(rhs) == 0;
    mpq_class inv = 1 / row[lead];
    for (std::size_t k = lead; k < n_; ++k) row[k] *= inv;
    rhs *= inv;
    // Keep earlier pivot rows reduced in the new pivot column.
    for (auto& [prow, prhs] : rows_) {
      if (sgn(prow[lead]) == 0) continue;
      mpq_class f = prow[lead];
      for (std::size_t k = lead; k < n_; ++k)
        if (sgn(row[k]) != 0) prow[k] -= f * row[k];
      prhs -= f * rhs;
    }
    pivot_row_[lead] = static_cast<long>(rows_.size());
    rows_.emplace_back(std::move(row), std::move(rhs));
    return true;
  }

  // Requires full rank.
  std::vector<mpq_class> solution() const {
    std::vector<mpq_class> x(n_);
    for (std::size_t c = 0; c < n_; ++c) x[c] = rows_[pivot_row_[c]].second;
    return x;
  }

 private:
  std::size_t n_;
  std::vector<long> pivot_row_;
  std::vector<std::pair<std::vector<mpq_class>, mpq_class>> rows_;
};

const char* basis_name(Basis b) { return b == Basis::Clebsch ? "c" : "J"; }

mpz_class lcm_of_denominators(const std::vector<InvariantExpression::Term>& terms) {
  mpz_class l = 1;
  for (const auto& t : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

Elem eval_terms(const std::vector<std::pair<std::array<int, 4>, Elem>>& terms, const std::array<Elem, 4>& vals) {
  const Field field = vals[0].field();
  Elem acc = field.zero();
  std::array<std::vector<Elem>, 4> pw;
  for (const auto& [e, c] : terms) {
    Elem m = c;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      auto& p = pw[i];
      if (p.empty()) p.push_back(field.one());
      while (static_cast<int>(p.size()) <= e[i]) p.push_back(p.back() * vals[i]);
      m *= p[e[i]];
    }
    acc += m;
  }
  return acc;
}

std::string cache_path_override;
std::once_flag cache_once;
ExpressionCache* global_cache = nullptr;

}  // namespace

// ------------------------------------------------------------ expression

InvariantExpression::InvariantExpression(Basis basis, int degree, int r_power, std::vector<Term> terms)
    : basis_(basis), degree_(degree), r_power_(r_power), terms_(std::move(terms)) {
  if (r_power < 0 || r_power > 1) throw Error(Errc::BadParameter, "r_power must be 0 or 1");
  for (const auto& t : terms_) {
    if (2 * t.e[0] + 4 * t.e[1] + 6 * t.e[2] + 10 * t.e[3] != cofactor_degree())
      throw Error(Errc::DegreeMismatch, "term weight differs from the expression degree");
  }
}

bool InvariantExpression::reduces_exactly(std::uint32_t p) const {
  if (p == 0) return true;
  for (const auto& t : terms_)
    if (mpz_divisible_ui_p(t.coeff.get_den_mpz_t(), p)) return false;
  return true;
}

Elem InvariantExpression::eval(const std::array<Elem, 4>& vals) const {
  const Field field = vals[0].field();
  if (!reduces_exactly(field.characteristic()))
    throw Error(Errc::MissingCache, "expression has a denominator divisible by " + field.name());
  std::vector<std::pair<std::array<int, 4>, Elem>> terms;
  for (const auto& t : terms_) terms.emplace_back(t.e, field.from_rational(t.coeff));
  return eval_terms(terms, vals);
}

Elem InvariantExpression::eval_cleared(const std::array<Elem, 4>& vals) const {
  const Field field = vals[0].field();
  mpz_class l = lcm_of_denominators(terms_);
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& t : terms_) {
    ints.push_back(mpz_class(t.coeff * l));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<std::pair<std::array<int, 4>, Elem>> terms;
  bool all_zero = true;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    Elem c = field.from_mpz(mpz_class(ints[i] / g));
    if (!c.is_zero()) all_zero = false;
    terms.emplace_back(terms_[i].e, c);
  }
  if (all_zero) throw Error(Errc::MissingCache, "cleared expression vanishes in " + field.name());
  return eval_terms(terms, vals);
}

std::string InvariantExpression::to_string() const {
  static const char* const names[2][4] = {{"c2", "c4", "c6", "c10"}, {"J2", "J4", "J6", "J10"}};
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += sgn(t.coeff) < 0 ? " - " : " + ";
    else if (sgn(t.coeff) < 0) out += "-";
    mpq_class a = abs(t.coeff);
    std::string mono;
    for (int i = 0; i < 4; ++i) {
      if (t.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[basis_ == Basis::Igusa][i];
      if (t.e[i] > 1) mono += "^" + std::to_string(t.e[i]);
    }
    if (a != 1 || mono.empty()) out += a.get_str() + (mono.empty() ? "" : "*");
    out += mono;
  }
  if (out.empty()) out = "0";
  if (r_power_) out = "(" + out + ")*R";
  return out;
}

std::vector<std::array<int, 4>> weighted_monomials(int degree) {
  std::vector<std::array<int, 4>> out;
  if (degree < 0 || degree % 2) return out;
  for (int a = 0; 2 * a <= degree; ++a)
    for (int b = 0; 2 * a + 4 * b <= degree; ++b)
      for (int c = 0; 2 * a + 4 * b + 6 * c <= degree; ++c) {
        int rest = degree - 2 * a - 4 * b - 6 * c;
        if (rest % 10 == 0) out.push_back({a, b, c, rest / 10});
      }
  return out;
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : UINT64_MAX - UINT64_MAX % span;
  for (;;) {
    std::uint64_t v = eng_();
    if (span == 0) return static_cast<long>(v);
    if (v < limit) return lo + static_cast<long>(v % span);
  }
}

// ------------------------------------------------------------- deriving

InvariantExpression derive_expression(const FormEvaluator& target, int degree, Rng& rng,
                                      const DeriveOptions& opts) {
  const int cof_degree = degree - 15 * opts.r_power;
  const auto monos = weighted_monomials(cof_degree);
  const std::size_t n = monos.size();
  auto sample = [&](BinaryForm& f, mpq_class& rhs, std::vector<mpq_class>& row) {
    for (;;) {
      f = random_sextic(rng, opts.box);
      Elem t = target(f);
      if (opts.r_power) {
        Elem r = r_invariant(f);
        if (r.is_zero()) continue;
        t = t / r;
      }
      rhs = t.rational();
      row = monomial_row(monos, basis_values(opts.basis, f));
      return;
    }
  };

  {
    BinaryForm f = random_sextic(rng, opts.box);
    Elem t1 = target(f), t2 = target(Q().from_int(2) * f);
    if (t2 != Q().from_int(2).pow(degree) * t1)
      throw Error(Errc::DegreeMismatch, "target does not scale with degree " + std::to_string(degree));
  }

  std::vector<mpq_class> coeffs;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 5) throw Error(Errc::NotAnInvariant, "interpolation system stays rank deficient");
    Echelon ech(n);
    const std::size_t rows = std::max<std::size_t>(2 * n, 4);
    for (std::size_t r = 0; r < rows; ++r) {
      BinaryForm f(Q(), 6);
      mpq_class rhs;
      std::vector<mpq_class> row;
      sample(f, rhs, row);
      if (!ech.add(std::move(row), rhs))
        throw Error(Errc::NotAnInvariant, "inconsistent interpolation system");
    }
    if (ech.rank() == n) {
      coeffs = ech.solution();
      break;
    }
  }

  std::vector<InvariantExpression::Term> terms;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(coeffs[i]) != 0) terms.push_back({monos[i], coeffs[i]});
  InvariantExpression expr(opts.basis, degree, opts.r_power, std::move(terms));

  for (int k = 0; k < opts.fresh_checks; ++k) {
    BinaryForm f = random_sextic(rng, opts.box);
    Elem want = target(f);
    Elem got = expr.eval(basis_values(opts.basis, f));
    if (opts.r_power) got *= r_invariant(f);
    if (got != want) throw Error(Errc::NotAnInvariant, "fitted expression fails on a fresh sample");
  }
  return expr;
}

// --------------------------------------------------------------- oracles

std::vector<std::string> cache_entry_names() {
  std::vector<std::string> out;
  for (const char* prefix : {"A_", "Abar_"})
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) out.push_back(prefix + std::to_string(i) + std::to_string(j));
  for (const char* prefix : {"a_", "abar_"})
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j)
        for (int k = j; k <= 3; ++k)
          out.push_back(prefix + std::to_string(i) + std::to_string(j) + std::to_string(k));
  out.push_back("Rsq");
  out.push_back("Rsq_J");
  for (int d : {2, 4, 6, 10}) out.push_back("c_from_J.c" + std::to_string(d));
  for (int d : {2, 4, 6, 10}) out.push_back("J_from_c.J" + std::to_string(d));
  return out;
}

Elem expression_oracle(const std::string& name, const BinaryForm& f) {
  const EntrySpec s = parse_name(name);
  const Field field = f.field();
  switch (s.kind) {
    case EntrySpec::Rsq:
    case EntrySpec::RsqJ: {
      Elem r = r_invariant(f);
      return r * r;
    }
    case EntrySpec::CFromJ: return pick_c(clebsch_invariants(f), s.idx[0]);
    case EntrySpec::JFromC: return pick_j(igusa_even(f), s.idx[0]);
    default: break;
  }
  Covariants cov = covariants(f);
  std::array<const BinaryForm*, 3> y{&cov.y1, &cov.y2, &cov.y3};
  BinaryForm x3 = transvectant(cov.y1, cov.y2, 1);
  std::array<const BinaryForm*, 3> ybar{&cov.y1, &cov.y2, &x3};
  switch (s.kind) {
    case EntrySpec::Conic: return transvectant(*y[s.idx[0]], *y[s.idx[1]], 2)[0];
    case EntrySpec::ConicBar: return transvectant(*ybar[s.idx[0]], *ybar[s.idx[1]], 2)[0];
    case EntrySpec::Cubic:
      return transvectant(f, *y[s.idx[0]] * *y[s.idx[1]] * *y[s.idx[2]], 6)[0];
    case EntrySpec::CubicBar:
      return field.from_int(2) / field.from_int(75) *
             transvectant(f, *ybar[s.idx[0]] * *ybar[s.idx[1]] * *ybar[s.idx[2]], 6)[0];
    default: break;
  }
  throw Error(Errc::BadParameter, "oracle for " + name);
}

// ----------------------------------------------------------------- cache

const InvariantExpression& ExpressionCache::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw Error(Errc::MissingCache, "expression cache lacks " + name);
  return it->second;
}

std::string ExpressionCache::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kFormatVersion;
  j["normalization"] = normalization_tag();
  j["seed"] = seed_;
  for (const auto& [name, e] : entries_) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : e.terms()) terms.push_back({t.e, t.coeff.get_str()});
    j[name] = {{"basis", basis_name(e.basis())},
               {"degree", e.degree()},
               {"r_power", e.r_power()},
               {"terms", terms}};
  }
  return j.dump(1);
}

ExpressionCache ExpressionCache::from_json(const std::string& text) {
  ExpressionCache out;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != kFormatVersion)
      throw Error(Errc::ParseError, "expression cache version mismatch");
    if (j.at("normalization").get<std::string>() != normalization_tag())
      throw Error(Errc::ParseError, "expression cache built under another normalization");
    out.seed_ = j.at("seed").get<std::uint64_t>();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!it.value().is_object()) continue;
      parse_name(it.key());
      const auto& v = it.value();
      std::string b = v.at("basis").get<std::string>();
      if (b != "c" && b != "J") throw Error(Errc::ParseError, "bad basis in cache");
      std::vector<InvariantExpression::Term> terms;
      for (const auto& t : v.at("terms")) {
        mpq_class q;
        if (q.set_str(t.at(1).get<std::string>(), 10) != 0 || q.get_den() == 0)
          throw Error(Errc::ParseError, "bad coefficient in cache");
        q.canonicalize();
        terms.push_back({t.at(0).get<std::array<int, 4>>(), q});
      }
      out.entries_[it.key()] = InvariantExpression(b == "c" ? Basis::Clebsch : Basis::Igusa,
                                                   v.at("degree").get<int>(),
                                                   v.at("r_power").get<int>(), std::move(terms));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("expression cache: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::BadParameter) throw Error(Errc::ParseError, e.what());
    throw;
  }
  for (const auto& name : cache_entry_names())
    if (!out.contains(name)) throw Error(Errc::ParseError, "expression cache lacks " + name);
  return out;
}

void ExpressionCache::verify(Rng& rng, int samples) const {
  for (int s = 0; s < samples; ++s) {
    BinaryForm f = random_sextic(rng, 20);
    std::array<Elem, 4> c = basis_values(Basis::Clebsch, f);
    std::array<Elem, 4> j = basis_values(Basis::Igusa, f);
    Elem r = r_invariant(f);
    for (const auto& [name, e] : entries_) {
      Elem got = e.eval(e.basis() == Basis::Clebsch ? c : j);
      if (e.r_power()) got *= r;
      if (got != expression_oracle(name, f))
        throw Error(Errc::VerificationFailed, "cache entry " + name + " disagrees with its oracle");
    }
  }
}

ExpressionCache cache_bootstrap(std::uint64_t seed) {
  ExpressionCache cache;
  cache.set_seed(seed);
  Rng rng(seed);
  for (const auto& name : cache_entry_names()) {
    EntryShape sh = shape_of(parse_name(name));
    DeriveOptions opts;
    opts.basis = sh.basis;
    opts.r_power = sh.r_power;
    cache.put(name, derive_expression([&name](const BinaryForm& f) { return expression_oracle(name, f); },
                                      sh.degree, rng, opts));
  }

  // The barred entries must agree with the closed formulas at random points.
  Field q = Q();
  for (int s = 0; s < 5; ++s) {
    ClebschVector c{q.from_int(rng.uniform(-50, 50)), q.from_int(rng.uniform(-50, 50)),
                    q.from_int(rng.uniform(-50, 50)), q.from_int(rng.uniform(-50, 50))};
    Elem r = q.from_int(rng.uniform(1, 50));
    ConicCubicData d = v4_conic_cubic_data(c, r);
    std::array<Elem, 4> cv{c.c2, c.c4, c.c6, c.c10};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const auto& e = cache.get("Abar_" + std::to_string(i + 1) + std::to_string(j + 1));
        Elem got = e.eval(cv) * (e.r_power() ? r : q.one());
        if (got != d.conic.a[i][j])
          throw Error(Errc::VerificationFailed, "derived Abar disagrees with the closed formula");
        for (int k = j; k < 3; ++k) {
          const auto& ee = cache.get("abar_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                     std::to_string(k + 1));
          Elem g = ee.eval(cv) * (ee.r_power() ? r : q.one());
          if (g != d.cubic.a[i][j][k])
            throw Error(Errc::VerificationFailed, "derived abar disagrees with the closed formula");
        }
      }
  }
  return cache;
}

void set_cache_path(const std::string& path) { cache_path_override = path; }

const ExpressionCache& expression_cache() {
  std::call_once(cache_once, [] {
    std::string path = cache_path_override;
    if (path.empty())
      if (const char* env = std::getenv("G2_CACHE")) path = env;
    if (!path.empty() && std::filesystem::exists(path)) {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      auto cache = std::make_unique<ExpressionCache>(ExpressionCache::from_json(ss.str()));
      Rng rng(cache->seed() ^ 0x9e3779b97f4a7c15ull);
      cache->verify(rng, 2);
      global_cache = cache.release();
      return;
    }
    auto cache = std::make_unique<ExpressionCache>(cache_bootstrap());
    if (!path.empty()) {
      std::string tmp = path + ".tmp" + std::to_string(::getpid());
      {
        std::ofstream out(tmp);
        out << cache->to_json() << "\n";
      }
      std::filesystem::rename(tmp, path);
    }
    global_cache = cache.release();
  });
  return *global_cache;
}

ClebschVector clebsch_from_igusa(const IgusaVector& j) {
  const Field field = j.J10.field();
  std::uint32_t p = field.characteristic();
  if (p != 0 && p <= 5) throw Error(Errc::SmallCharacteristic, "Clebsch values need characteristic 0 or > 5");
  const ExpressionCache& cache = expression_cache();
  std::array<Elem, 4> jv{j.J2, j.J4, j.J6, j.J10};
  return {cache.get("c_from_J.c2").eval(jv), cache.get("c_from_J.c4").eval(jv),
          cache.get("c_from_J.c6").eval(jv), cache.get("c_from_J.c10").eval(jv)};
}

ConicCubicData mestre_data_from_invariants(const IgusaVector& j) {
  ClebschVector c = clebsch_from_igusa(j);
  const Field field = j.J10.field();
  const ExpressionCache& cache = expression_cache();
  std::array<Elem, 4> cv{c.c2, c.c4, c.c6, c.c10};
  ConicCubicData out{Conic(field), CubicForm(field)};
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      Elem v = cache.get("A_" + std::to_string(a + 1) + std::to_string(b + 1)).eval(cv);
      out.conic.a[a][b] = out.conic.a[b][a] = v;
      for (int k = b; k < 3; ++k)
        out.cubic.set(a, b, k,
                      cache.get("a_" + std::to_string(a + 1) + std::to_string(b + 1) + std::to_string(k + 1))
                          .eval(cv));
    }
  return out;
}

}  // namespace g2
