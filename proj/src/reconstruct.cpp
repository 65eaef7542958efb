#include "g2/reconstruct.hpp"

#include "g2/expressions.hpp"

namespace g2 {

namespace {

CurveModel poly_curve(std::initializer_list<Elem> ascending, const Field& f) {
  return CurveModel::from_poly(std::vector<Elem>(ascending), f);
}

void require_mestre_characteristic(const Field& f, const char* what) {
  std::uint32_t p = f.characteristic();
  if (p == 3 || p == 5) throw Error(Errc::Unsupported, std::string(what) + " is not available in " + f.name());
}

CurveModel verified(const CurveModel& c, const ModuliPoint& p) {
  if (moduli_point(c) != p)
    throw Error(Errc::VerificationFailed, "reconstructed curve has moduli point " + moduli_point(c).to_string() +
                                              " instead of " + p.to_string());
  return c;
}

ReconstructionResult curve_result(AutGroup g, CurveModel c) {
  ReconstructionResult r{ReconstructionResult::Outcome::Curve, g, std::move(c), {}, {}};
  return r;
}

CurveModel curve_from_sextic(const BinaryForm& sextic) {
  if (form_discriminant(sextic).is_zero())
    throw Error(Errc::DegenerateOutput, "pulled-back sextic has a repeated factor");
  return CurveModel::from_form(sextic);
}

}  // namespace

std::string_view to_string(ReconstructionResult::Outcome o) {
  switch (o) {
    case ReconstructionResult::Outcome::Curve: return "Curve";
    case ReconstructionResult::Outcome::Obstructed: return "Obstructed";
    case ReconstructionResult::Outcome::Unsupported: return "Unsupported";
  }
  return "?";
}

CurveModel family_model(AutGroup group, const std::optional<Elem>& t, const Field& f) {
  const std::uint32_t ch = f.characteristic();
  const Elem z = f.zero(), o = f.one();
  auto need_t = [&](bool exclude_quarter) {
    if (!t) throw Error(Errc::BadParameter, "family model needs t");
    if (t->characteristic() != ch) throw Error(Errc::FieldMismatch, "t is not in " + f.name());
    if (t->is_zero()) throw Error(Errc::BadParameter, "t = 0 is excluded");
    if (exclude_quarter && *t == o / f.from_int(4)) throw Error(Errc::BadParameter, "t = 1/4 is excluded");
    return *t;
  };
  switch (group) {
    case AutGroup::D8: {
      Elem tv = need_t(true);
      return poly_curve({z, tv, z, o, z, o}, f);
    }
    case AutGroup::D12: {
      if (ch == 3) {
        Elem ts = cube_root_char3(f, need_t(false));
        return poly_curve({o, z, o, z, o, z, ts.inverse()}, f);
      }
      Elem tv = need_t(true);
      return poly_curve({tv, z, z, o, z, z, o}, f);
    }
    case AutGroup::TwoD12:
    case AutGroup::S4tilde:
    case AutGroup::C10:
      if (ch == 5) throw Error(Errc::Unsupported, "special points merge in characteristic 5");
      if (group == AutGroup::TwoD12) {
        if (ch == 3) throw Error(Errc::Unsupported, "no 2D12 curves in characteristic 3");
        return poly_curve({-o, z, z, z, z, z, o}, f);
      }
      if (group == AutGroup::S4tilde) return poly_curve({z, -o, z, z, z, o}, f);
      return poly_curve({-o, z, z, z, z, o}, f);
    case AutGroup::C2:
    case AutGroup::V4: break;
  }
  throw Error(Errc::WrongGroup, "no explicit model for " + std::string(to_string(group)));
}

BinaryForm pullback_sextic(const ConicCubicData& data, const Point3& point) {
  return cubic_pullback(data.cubic, conic_parametrize(data.conic, point));
}

ReconstructionResult mestre_reconstruct(const ModuliPoint& p) {
  require_mestre_characteristic(p.field, "Mestre's construction");
  ConicCubicData data = mestre_data_from_invariants(minimal_lift(p));
  if (conic_det(data.conic).is_zero())
    throw Error(Errc::DegenerateConic, "Mestre conic is degenerate at " + p.to_string());
  auto point = conic_point(data.conic);
  if (!point) {
    BrauerObstruction ob = conic_obstruction(data.conic);
    if (ob.places.empty() || ob.places.size() % 2)
      throw Error(Errc::VerificationFailed, "conic has no point but the place set is not a certificate");
    ReconstructionResult r{ReconstructionResult::Outcome::Obstructed, AutGroup::C2, std::nullopt, ob, {}};
    return r;
  }
  CurveModel c = curve_from_sextic(pullback_sextic(data, *point));
  return curve_result(AutGroup::C2, verified(c, p));
}

CurveModel v4_reconstruct(const ModuliPoint& p) {
  const Field& f = p.field;
  require_mestre_characteristic(f, "the extra-involution construction");
  if (classify_point(p) != AutGroup::V4) throw Error(Errc::WrongGroup, "point is not on the V4 locus");
  ClebschVector c = clebsch_from_igusa(minimal_lift(p));
  ConicCubicData d = v4_conic_cubic_data(c);
  const auto& A = d.conic.a;
  const auto& a = d.cubic.a;
  if (conic_det(d.conic).is_zero()) throw Error(Errc::DegenerateConic, "barred conic is degenerate");

  BinaryForm sextic(f, 6);
  if (!A[1][1].is_zero() && !A[2][2].is_zero()) {
    const Elem two = f.from_int(2), three = f.from_int(3);
    // Homogenized in (x : 1).
    BinaryForm p1(f, std::vector<Elem>{f.zero(), -two * A[1][1], -two * A[0][1]});
    BinaryForm p2(f, std::vector<Elem>{-A[1][1], f.zero(), A[0][0]});
    BinaryForm p3(f, std::vector<Elem>{A[1][1], two * A[0][1], A[0][0]});
    BinaryForm p1s = p1 * p1, p2s = p2 * p2, p3s = p3 * p3;
    sextic = (-A[2][2] * a[0][0][0]) * (p1s * p1) - (three * A[2][2] * a[0][0][1]) * (p1s * p2) -
             (three * A[2][2] * a[0][1][1]) * (p1 * p2s) + (three * A[1][1] * a[0][2][2]) * (p1 * p3s) -
             (A[2][2] * a[1][1][1]) * (p2s * p2) + (three * A[1][1] * a[1][2][2]) * (p2 * p3s);
  } else {
    // A_22 = 0 (A_33 = 0 would make the conic degenerate): (0, 1, 0) is on it.
    Point3 base{f.zero(), f.one(), f.zero()};
    sextic = pullback_sextic(d, base);
  }
  return verified(curve_from_sextic(sextic), p);
}

ReconstructionResult reconstruct(const ModuliPoint& p) {
  Classification cls;
  try {
    cls = classify_point_detail(p);
  } catch (const Error& e) {
    if (e.code() != Errc::Unsupported) throw;
    return {ReconstructionResult::Outcome::Unsupported, std::nullopt, std::nullopt, {}, e.what()};
  }
  try {
    switch (cls.group) {
      case AutGroup::C2:
        return mestre_reconstruct(p);
      case AutGroup::V4:
        return curve_result(AutGroup::V4, v4_reconstruct(p));
      default:
        return curve_result(cls.group, verified(family_model(cls.group, cls.t, p.field), p));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::Unsupported) throw;
    return {ReconstructionResult::Outcome::Unsupported, cls.group, std::nullopt, {}, e.what()};
  }
}

}  // namespace g2
