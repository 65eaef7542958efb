#include "g2/invariants.hpp"

#include <array>
#include <limits>
#include <set>
#include <sstream>

#include "g2/arith.hpp"
#include "g2/expressions.hpp"
#include "g2/igusa_tables.hpp"

namespace g2 {

namespace {

void require_large_characteristic(const Field& f, const char* what) {
  std::uint32_t p = f.characteristic();
  if (p != 0 && p <= 5)
    throw Error(Errc::SmallCharacteristic, std::string(what) + " needs characteristic 0 or > 5");
}

Elem eval_table(const igusa::Table& t, const std::array<std::vector<Elem>, 7>& pw, const Field& field) {
  Elem acc = field.zero();
  for (std::size_t n = 0; n < t.size; ++n) {
    const igusa::Term& term = t.terms[n];
    Elem m = field.from_int(term.c);
    for (int i = 0; i < 7; ++i)
      if (term.e[i]) m *= pw[i][term.e[i]];
    acc += m;
  }
  return acc / field.from_int(1l << t.log2_divisor);
}

}  // namespace

ModuliPoint::ModuliPoint(Field f, Elem a, Elem b, Elem c)
    : field(f), j1(std::move(a)), j2(std::move(b)), j3(std::move(c)) {
  for (const Elem* e : {&j1, &j2, &j3})
    if (e->characteristic() != f.characteristic()) throw Error(Errc::FieldMismatch, "moduli point");
}

ModuliPoint ModuliPoint::parse(const Field& f, const std::string& text) {
  std::vector<Elem> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::ParseError, "empty coordinate in '" + text + "'");
    parts.push_back(f.parse_elem(item.substr(b, e - b + 1)));
  }
  if (parts.size() != 3) throw Error(Errc::ParseError, "moduli point needs three coordinates");
  return ModuliPoint(f, parts[0], parts[1], parts[2]);
}

std::string ModuliPoint::to_string() const {
  return j1.to_string() + "," + j2.to_string() + "," + j3.to_string();
}

Covariants covariants(const BinaryForm& f) {
  require_large_characteristic(f.field(), "Clebsch covariants");
  if (f.order() != 6) throw Error(Errc::BadParameter, "covariants need an order-6 form");
  BinaryForm i = transvectant(f, f, 4);
  BinaryForm delta = transvectant(i, i, 2);
  BinaryForm y1 = transvectant(f, i, 4);
  BinaryForm y2 = transvectant(i, y1, 2);
  BinaryForm y3 = transvectant(i, y2, 2);
  return {std::move(i), std::move(delta), std::move(y1), std::move(y2), std::move(y3)};
}

ClebschVector clebsch_invariants(const Covariants& cov, const BinaryForm& f) {
  return {transvectant(f, f, 6)[0], transvectant(cov.i, cov.i, 4)[0],
          transvectant(cov.i, cov.delta, 4)[0], transvectant(cov.y3, cov.y1, 2)[0]};
}

ClebschVector clebsch_invariants(const BinaryForm& f) { return clebsch_invariants(covariants(f), f); }

Elem r_transvectant(const Covariants& cov) {
  return transvectant(transvectant(cov.y1, cov.y2, 1), cov.y3, 2)[0];
}

Elem r_invariant(const BinaryForm& f) {
  return r_transvectant(covariants(f)) * f.field().from_int(-8);
}

IgusaVector igusa_even(const BinaryForm& f) {
  if (f.order() != 6) throw Error(Errc::BadParameter, "Igusa invariants need an order-6 form");
  const Field& field = f.field();
  std::array<std::vector<Elem>, 7> pw;
  for (int i = 0; i < 7; ++i) {
    pw[i].push_back(field.one());
    for (int e = 1; e <= 10; ++e) pw[i].push_back(pw[i].back() * f[i]);
  }
  IgusaVector out;
  out.J2 = eval_table(igusa::kTables[0], pw, field);
  out.J4 = eval_table(igusa::kTables[1], pw, field);
  out.J6 = eval_table(igusa::kTables[2], pw, field);
  out.J10 = eval_table(igusa::kTables[3], pw, field);
  return out;
}

IgusaVector igusa_invariants(const BinaryForm& f) {
  IgusaVector out = igusa_even(f);
  std::uint32_t p = f.field().characteristic();
  if (p == 0 || p > 5) {
    Elem r = r_invariant(f);
    out.R_squared = r * r;
    out.R = r;
  } else {
    const InvariantExpression& rsq = expression_cache().get("Rsq_J");
    if (rsq.reduces_exactly(p)) out.R_squared = rsq.eval({out.J2, out.J4, out.J6, out.J10});
  }
  return out;
}

ModuliPoint absolute_invariants(const IgusaVector& j) {
  if (j.J10.is_zero()) throw Error(Errc::NotACurve, "J10 = 0");
  const Field field = j.J10.field();
  const Elem zero = field.zero();
  if (!j.J2.is_zero()) {
    Elem j2sq = j.J2 * j.J2;
    return ModuliPoint(field, j2sq * j2sq * j.J2 / j.J10, j2sq * j.J2 * j.J4 / j.J10, j2sq * j.J6 / j.J10);
  }
  if (!j.J4.is_zero())
    return ModuliPoint(field, zero, j.J4.pow(5) / (j.J10 * j.J10), j.J4 * j.J6 / j.J10);
  return ModuliPoint(field, zero, zero, j.J6.pow(5) / j.J10.pow(3));
}

ModuliPoint moduli_point(const CurveModel& c) { return absolute_invariants(igusa_even(curve_to_form(c))); }

IgusaVector lift_point(const ModuliPoint& p) {
  const Field& f = p.field;
  IgusaVector out;
  if (!p.j1.is_zero()) {
    out.J2 = p.j1;
    out.J4 = p.j1 * p.j2;
    out.J6 = p.j1 * p.j1 * p.j3;
    out.J10 = p.j1.pow(4);
  } else if (!p.j2.is_zero()) {
    out.J2 = f.zero();
    out.J4 = p.j2;
    out.J6 = p.j2 * p.j3;
    out.J10 = p.j2 * p.j2;
  } else if (!p.j3.is_zero()) {
    out.J2 = out.J4 = f.zero();
    out.J6 = p.j3 * p.j3;
    out.J10 = p.j3.pow(3);
  } else {
    out.J2 = out.J4 = out.J6 = f.zero();
    out.J10 = f.one();
  }
  return out;
}

IgusaVector minimal_lift(const ModuliPoint& p) {
  IgusaVector j = lift_point(p);
  if (!p.field.is_rationals()) return j;
  const std::array<const Elem*, 4> vals{&j.J2, &j.J4, &j.J6, &j.J10};
  constexpr std::array<long, 4> weight{1, 2, 3, 5};
  std::set<mpz_class> primes;
  for (const Elem* v : vals) {
    if (v->is_zero()) continue;
    for (const mpz_class& n : {v->rational().get_num(), v->rational().get_den()}) {
      if (abs(n) == 1) continue;
      try {
        for (const auto& [q, e] : arith::factorize(n)) primes.insert(q);
      } catch (const Error& e) {
        // An unfactored number only leaves its primes unreduced.
        if (e.code() != Errc::FactorizationLimit) throw;
      }
    }
  }
  mpq_class d = 1;
  for (const mpz_class& q : primes) {
    // Smallest e with v_q(J_k) + e w_k >= 0 for every nonzero J_k.
    long e = std::numeric_limits<long>::min();
    for (int k = 0; k < 4; ++k) {
      const Elem& v = *vals[k];
      if (v.is_zero()) continue;
      long val = static_cast<long>(mpz_remove(mpz_class().get_mpz_t(), v.rational().get_num_mpz_t(), q.get_mpz_t())) -
                 static_cast<long>(mpz_remove(mpz_class().get_mpz_t(), v.rational().get_den_mpz_t(), q.get_mpz_t()));
      long need = val >= 0 ? -(val / weight[k]) : (-val + weight[k] - 1) / weight[k];
      e = std::max(e, need);
    }
    mpz_class qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    if (e >= 0) d *= qe; else d /= qe;
  }
  return rescale_invariants(j, p.field.from_rational(d));
}

IgusaVector rescale_invariants(const IgusaVector& j, const Elem& d) {
  if (d.is_zero()) throw Error(Errc::ZeroScale, "rescale by 0");
  Elem d2 = d * d;
  IgusaVector out{d * j.J2, d2 * j.J4, d2 * d * j.J6, d2 * d2 * d * j.J10, std::nullopt, std::nullopt};
  if (j.R_squared) out.R_squared = d.pow(15) * *j.R_squared;
  const Field field = d.field();
  if (j.R) {
    if (auto s = sqrt_in_field(field, d)) out.R = s->pow(15) * *j.R;
  }
  if (!out.R && out.R_squared) {
    // R^2 = d R0^2 gives R = d^8 R0.
    if (auto r0 = sqrt_in_field(field, *j.R_squared / d)) out.R = d.pow(8) * *r0;
  }
  return out;
}

bool same_moduli(const CurveModel& a, const CurveModel& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "same_moduli");
  return moduli_point(a) == moduli_point(b);
}

ConicCubicData v4_conic_cubic_data(const ClebschVector& c, std::optional<Elem> r) {
  const Field field = c.c2.field();
  require_large_characteristic(field, "v4_conic_cubic_data");
  auto q = [&](long n, long d = 1) { return field.from_int(n) / field.from_int(d); };
  const Elem &c2 = c.c2, &c4 = c.c4, &c6 = c.c6, &c10 = c.c10;
  const Elem R = r.value_or(field.zero());
  const Elem c2s = c2 * c2, c4s = c4 * c4, c6s = c6 * c6;

  ConicCubicData out{Conic(field), CubicForm(field)};
  auto& A = out.conic.a;
  A[0][0] = q(1, 3) * (c2 * c4 + q(6) * c6);
  A[0][1] = A[1][0] = q(2, 3) * (c4s + c2 * c6);
  A[1][1] = c10;
  A[2][2] = q(1, 18) * (q(-4) * c4s * c4s - q(8) * c2 * c4s * c6 - q(4) * c2s * c6s +
                        q(3) * c2 * c4 * c10 + q(18) * c6 * c10);

  auto& M = out.cubic;
  M.set(0, 0, 0, q(4, 675) * (c2s * c6 - q(6) * c4 * c6 + q(9) * c10));
  M.set(0, 0, 1, q(2, 675) * (q(2) * c4s * c4 + q(4) * c2 * c4 * c6 + q(12) * c6s + q(3) * c2 * c10));
  M.set(0, 0, 2, q(-1, 150) * R);
  M.set(0, 1, 1, q(2, 2025) * (q(3) * c2 * c4s * c4 + q(4) * c2s * c4 * c6 + q(12) * c4s * c6 +
                               q(18) * c2 * c6s + q(9) * c4 * c10));
  M.set(0, 1, 2, q(-1, 900) * c2 * R);
  M.set(0, 2, 2,
        q(1, 6075) * (q(-3) * c2s * c4s * c4s + q(24) * c4s * c4s * c4 - q(4) * c2s * c2 * c4s * c6 +
                      q(42) * c2 * c4s * c4 * c6 + q(6) * c2s * c4 * c6s + q(72) * c4s * c6s +
                      q(36) * c2 * c6s * c6 + q(27) * c2 * c4s * c10 + q(18) * c2s * c6 * c10 +
                      q(54) * c4 * c6 * c10 - q(162) * c10 * c10));
  M.set(1, 1, 1, q(2, 2025) * (q(9) * c4s * c4s + q(18) * c2 * c4s * c6 + q(8) * c2s * c6s +
                               q(6) * c4 * c6s - q(9) * c6 * c10));
  M.set(1, 1, 2, q(-1, 900) * c4 * R);
  M.set(1, 2, 2,
        q(1, 6075) * (q(3) * c2 * c4s * c4s * c4 + q(10) * c2s * c4s * c4 * c6 - q(6) * c4s * c4s * c6 +
                      q(8) * c2s * c2 * c4 * c6s + q(6) * c2 * c4s * c6s + q(24) * c2s * c6s * c6 -
                      q(36) * c4 * c6s * c6 + q(18) * c4s * c4 * c10 + q(9) * c2 * c4 * c6 * c10 -
                      q(54) * c6s * c10 - q(27) * c2 * c10 * c10));
  M.set(2, 2, 2, q(1, 5400) * (q(-3) * c2 * c4s - q(4) * c2s * c6 + q(6) * c4 * c6 + q(18) * c10) * R);
  return out;
}

Elem abar33_without_c6c10(const ClebschVector& c) {
  const Field field = c.c2.field();
  auto q = [&](long n, long d = 1) { return field.from_int(n) / field.from_int(d); };
  const Elem &c2 = c.c2, &c4 = c.c4, &c6 = c.c6, &c10 = c.c10;
  return q(1, 18) * (q(-4) * c4.pow(4) - q(8) * c2 * c4 * c4 * c6 - q(4) * c2 * c2 * c6 * c6 +
                     q(3) * c2 * c4 * c10);
}

Elem abar233_with_c4sq_c10(const ClebschVector& c) {
  ConicCubicData d = v4_conic_cubic_data(c);
  const Field field = c.c2.field();
  // Replace 18 c4^3 c10 by 18 c4^2 c10 inside the 1/6075 bracket.
  Elem delta = field.from_int(18) * (c.c4 * c.c4 - c.c4.pow(3)) * c.c10 / field.from_int(6075);
  return d.cubic.a[1][2][2] + delta;
}

}  // namespace g2
