#include "g2/classifier.hpp"

#include "g2/expressions.hpp"
#include "g2/reconstruct.hpp"

namespace g2 {

namespace {

ModuliPoint point_of(std::initializer_list<long> ascending, const Field& f) {
  std::vector<Elem> c;
  for (long v : ascending) c.push_back(f.from_int(v));
  return moduli_point(CurveModel::from_poly(std::move(c), f));
}

ModuliPoint special_point(AutGroup g, const Field& f) { return moduli_point(family_model(g, std::nullopt, f)); }

bool is_origin(const ModuliPoint& p) { return p.j1.is_zero() && p.j2.is_zero() && p.j3.is_zero(); }

// Steps shared by points and curves up to the R^2 test; nullopt means "not
// special, not on either family".
std::optional<Classification> classify_special(const ModuliPoint& p) {
  const Field& f = p.field;
  const std::uint32_t ch = f.characteristic();
  if (ch == 5) {
    // The three isolated points merge; its reduced group is outside the list.
    if (is_origin(p) || p == point_of({0, -1, 0, 0, 0, 1}, f) || p == point_of({-1, 0, 0, 0, 0, 0, 1}, f))
      throw Error(Errc::Unsupported, "merged special point in characteristic 5");
  } else {
    if (is_origin(p)) return Classification{AutGroup::C10, std::nullopt};
    if (ch != 3 && p == special_point(AutGroup::TwoD12, f)) return Classification{AutGroup::TwoD12, std::nullopt};
    if (p == special_point(AutGroup::S4tilde, f)) return Classification{AutGroup::S4tilde, std::nullopt};
  }
  for (Family fam : {Family::D8, Family::D12}) {
    Elem t = f.zero();
    try {
      t = t_invariant(p, fam);
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateDenominator) throw;
      continue;
    }
    AutGroup g = fam == Family::D8 ? AutGroup::D8 : AutGroup::D12;
    try {
      if (p == moduli_point(family_model(g, t, f))) return Classification{g, t};
    } catch (const Error& e) {
      // Excluded t or a singular model: not on this family.
      if (e.code() != Errc::BadParameter && e.code() != Errc::DegenerateCurve) throw;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(AutGroup g) {
  switch (g) {
    case AutGroup::C2: return "C2";
    case AutGroup::V4: return "V4";
    case AutGroup::D8: return "D8";
    case AutGroup::D12: return "D12";
    case AutGroup::TwoD12: return "TwoD12";
    case AutGroup::S4tilde: return "S4tilde";
    case AutGroup::C10: return "C10";
  }
  return "?";
}

AutGroup parse_aut_group(std::string_view s) {
  for (AutGroup g : {AutGroup::C2, AutGroup::V4, AutGroup::D8, AutGroup::D12, AutGroup::TwoD12,
                     AutGroup::S4tilde, AutGroup::C10})
    if (s == to_string(g)) return g;
  throw Error(Errc::ParseError, "unknown group '" + std::string(s) + "'");
}

Elem t_invariant(const ModuliPoint& p, Family family) {
  const Field& f = p.field;
  const std::uint32_t ch = f.characteristic();
  IgusaVector j = lift_point(p);
  auto ratio = [&](const Elem& num, const Elem& den) {
    if (den.is_zero()) throw Error(Errc::DegenerateDenominator, "t-invariant denominator vanishes");
    return num / den;
  };
  if (ch == 5) {
    Elem r = ratio(j.J4, j.J2 * j.J2);
    return family == Family::D8 ? f.one() + r : -f.one() - r;
  }
  if (ch == 3) {
    if (family == Family::D8) return ratio(-(j.J2 * j.J2), j.J4);
    return ratio(-(j.J2 * j.J2 * j.J2), j.J6);
  }
  ClebschVector c = clebsch_from_igusa(j);
  if (family == Family::D8)
    return ratio(f.from_int(8) * c.c6 * (f.from_int(6) * c.c4 - c.c2 * c.c2) + f.from_int(9) * c.c10,
                 f.from_int(900) * c.c10);
  return ratio(f.from_int(3) * c.c4 * c.c6 - c.c10, f.from_int(50) * c.c10);
}

Classification classify_point_detail(const ModuliPoint& p) {
  if (auto s = classify_special(p)) return *s;
  const Field& f = p.field;
  const std::uint32_t ch = f.characteristic();
  IgusaVector j = lift_point(p);
  bool r_zero;
  if (ch == 0 || ch > 5) {
    ClebschVector c = clebsch_from_igusa(j);
    r_zero = expression_cache().get("Rsq").eval({c.c2, c.c4, c.c6, c.c10}).is_zero();
  } else {
    try {
      r_zero = expression_cache().get("Rsq_J").eval_cleared({j.J2, j.J4, j.J6, j.J10}).is_zero();
    } catch (const Error& e) {
      if (e.code() == Errc::MissingCache) throw Error(Errc::Unsupported, e.what());
      throw;
    }
  }
  return {r_zero ? AutGroup::V4 : AutGroup::C2, std::nullopt};
}

AutGroup classify_point(const ModuliPoint& p) { return classify_point_detail(p).group; }

Classification classify_curve_detail(const CurveModel& c) {
  const std::uint32_t ch = c.field().characteristic();
  if (ch != 0 && ch <= 5) return classify_point_detail(moduli_point(c));
  ModuliPoint p = moduli_point(c);
  if (auto s = classify_special(p)) return *s;
  return {r_invariant(curve_to_form(c)).is_zero() ? AutGroup::V4 : AutGroup::C2, std::nullopt};
}

AutGroup classify_curve(const CurveModel& c) { return classify_curve_detail(c).group; }

}  // namespace g2
