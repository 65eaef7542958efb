#include <map>
#include <random>

#include "doctest.h"
#include "g2/classifier.hpp"
#include "support.hpp"

using namespace g2;

namespace {

const Field Q = Field::rationals();

ModuliPoint point_of(const Field& f, std::initializer_list<long> ascending) {
  return moduli_point(test::curve_of(f, ascending));
}

}  // namespace

TEST_CASE("group names round-trip") {
  for (AutGroup g : {AutGroup::C2, AutGroup::V4, AutGroup::D8, AutGroup::D12, AutGroup::TwoD12, AutGroup::S4tilde,
                     AutGroup::C10})
    CHECK(parse_aut_group(to_string(g)) == g);
  CHECK(test::error_of([] { parse_aut_group("D10"); }) == Errc::ParseError);
}

TEST_CASE("points with known groups") {
  CHECK(classify_point(ModuliPoint(Q, Q.zero(), Q.zero(), Q.zero())) == AutGroup::C10);
  CHECK(classify_point(point_of(Q, {-1, 0, 0, 0, 0, 1})) == AutGroup::C10);
  // x -> -x and x -> 1/x both permute the roots of x^6 + x^4 + x^2 + 1.
  CHECK(classify_point(point_of(Q, {1, 0, 1, 0, 1, 0, 1})) == AutGroup::D8);
  CHECK(classify_point(point_of(Q, {1, 0, 2, 0, 1, 0, 1})) == AutGroup::V4);
  CHECK(classify_point(point_of(Q, {1, 1, 0, 0, 0, 0, 1})) == AutGroup::C2);
  CHECK(classify_curve(test::curve_of(Q, {-1, 0, 0, 0, 0, 0, 1})) == AutGroup::TwoD12);
  CHECK(classify_curve(test::curve_of(Q, {0, -1, 0, 0, 0, 1})) == AutGroup::S4tilde);
  Classification d8 = classify_curve_detail(test::curve_of(Q, {0, 2, 0, 1, 0, 1}));
  CHECK(d8.group == AutGroup::D8);
  REQUIRE(d8.t);
  CHECK(*d8.t == Q.from_int(2));
  Classification d12 = classify_point_detail(point_of(Q, {5, 0, 0, 1, 0, 0, 1}));
  CHECK(d12.group == AutGroup::D12);
  REQUIRE(d12.t);
  CHECK(*d12.t == Q.from_int(5));
}

TEST_CASE("family invariants") {
  CHECK(t_invariant(point_of(Q, {0, 2, 0, 1, 0, 1}), Family::D8) == Q.from_int(2));
  CHECK(t_invariant(point_of(Q, {5, 0, 0, 1, 0, 0, 1}), Family::D12) == Q.from_int(5));
  Field f3 = Field::prime(3);
  ModuliPoint p3 = point_of(f3, {0, 2, 0, 1, 0, 1});
  CHECK(t_invariant(p3, Family::D8) == f3.from_int(2));
  IgusaVector j = igusa_even(curve_to_form(test::curve_of(f3, {0, 2, 0, 1, 0, 1})));
  CHECK(t_invariant(p3, Family::D8) == -(j.J2 * j.J2) / j.J4);
  std::mt19937_64 gen(1);
  for (long p : {7, 11, 13}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 10; ++i) {
      Elem t = test::random_nonzero(gen, f);
      if (t == f.one() / f.from_int(4)) continue;
      const Elem z = f.zero(), o = f.one();
      // The family denominators vanish only at the 2D12 and S4tilde points.
      if (classify_point(moduli_point(CurveModel::from_poly({z, t, z, o, z, o}, f))) != AutGroup::D8) continue;
      if (classify_point(moduli_point(CurveModel::from_poly({t, z, z, o, z, z, o}, f))) != AutGroup::D12) continue;
      CHECK(t_invariant(moduli_point(CurveModel::from_poly({z, t, z, o, z, o}, f)), Family::D8) == t);
      CHECK(t_invariant(moduli_point(CurveModel::from_poly({t, z, z, o, z, z, o}, f)), Family::D12) == t);
    }
  }
  for (const Field& f : {Q, Field::prime(7), Field::prime(13)}) {
    CHECK(test::error_of([&] { t_invariant(point_of(f, {-1, 0, 0, 0, 0, 0, 1}), Family::D8); }) ==
          Errc::DegenerateDenominator);
    CHECK(test::error_of([&] { t_invariant(point_of(f, {0, -1, 0, 0, 0, 1}), Family::D12); }) ==
          Errc::DegenerateDenominator);
  }
}

TEST_CASE("curve and point classification agree") {
  std::mt19937_64 gen(2);
  Field f7 = Field::prime(7);
  std::map<AutGroup, int> seen;
  for (int i = 0; i < 500; ++i) {
    CurveModel c = test::random_curve(gen, f7);
    AutGroup g = classify_curve(c);
    ++seen[g];
    CHECK(g == classify_point(moduli_point(c)));
  }
  CHECK(seen.size() >= 3);
  for (int i = 0; i < 100; ++i) {
    CurveModel c = test::random_curve(gen, Q, 4);
    CHECK(classify_curve(c) == classify_point(moduli_point(c)));
  }
}

TEST_CASE("the group is invariant under coordinate changes") {
  std::mt19937_64 gen(3);
  const std::vector<std::initializer_list<long>> models = {
      {1, 1, 0, 0, 0, 0, 1}, {1, 0, 2, 0, 1, 0, 1}, {0, 2, 0, 1, 0, 1},  {5, 0, 0, 1, 0, 0, 1},
      {-1, 0, 0, 0, 0, 0, 1}, {0, -1, 0, 0, 0, 1},  {-1, 0, 0, 0, 0, 1}};
  for (const Field& f : {Q, Field::prime(11), Field::prime(13)}) {
    for (const auto& m : models) {
      if (test::error_of([&] { test::curve_of(f, m); })) continue;
      CurveModel c = test::curve_of(f, m);
      BinaryForm F = curve_to_form(c);
      AutGroup g = classify_curve(c);
      for (int i = 0; i < 5; ++i) {
        BinaryForm G = gl2_transform(F, test::random_gl2(gen, f));
        if (form_discriminant(G).is_zero()) continue;
        CurveModel twisted = CurveModel::from_form(G);
        CHECK(classify_curve(twisted) == g);
        // A quadratic twist y^2 = d f(x) has the same group.
        CurveModel scaled = CurveModel::from_form(test::random_nonzero(gen, f, 5) * G);
        CHECK(classify_curve(scaled) == g);
      }
    }
  }
}

TEST_CASE("exactly one point of each special class over F_7") {
  Field f7 = Field::prime(7);
  std::map<AutGroup, int> counts;
  for (long a = 0; a < 7; ++a)
    for (long b = 0; b < 7; ++b)
      for (long c = 0; c < 7; ++c)
        ++counts[classify_point(ModuliPoint(f7, f7.from_int(a), f7.from_int(b), f7.from_int(c)))];
  CHECK(counts[AutGroup::C10] == 1);
  CHECK(counts[AutGroup::TwoD12] == 1);
  CHECK(counts[AutGroup::S4tilde] == 1);
}

TEST_CASE("small characteristics") {
  Field f5 = Field::prime(5);
  CHECK(test::error_of([&] { classify_point(ModuliPoint(f5, f5.zero(), f5.zero(), f5.zero())); }) ==
        Errc::Unsupported);
  CHECK(test::error_of([&] { classify_point(point_of(f5, {-1, 0, 0, 0, 0, 0, 1})); }) == Errc::Unsupported);
  CHECK(test::error_of([&] { classify_point(point_of(f5, {0, -1, 0, 0, 0, 1})); }) == Errc::Unsupported);
  Field f3 = Field::prime(3);
  CHECK(classify_point(point_of(f3, {-1, 0, 0, 0, 0, 1})) == AutGroup::C10);
  Classification d8 = classify_point_detail(point_of(f3, {0, 2, 0, 1, 0, 1}));
  CHECK(d8.group == AutGroup::D8);
  CHECK(classify_point(point_of(Field::prime(5), {0, 2, 0, 1, 0, 1})) == AutGroup::D8);
}
