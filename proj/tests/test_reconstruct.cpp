#include <random>

#include "doctest.h"
#include "g2/expressions.hpp"
#include "g2/reconstruct.hpp"
#include "support.hpp"

using namespace g2;
using Outcome = ReconstructionResult::Outcome;

namespace {

const Field Q = Field::rationals();

std::vector<Elem> elems(const Field& f, std::initializer_list<long> v) {
  std::vector<Elem> out;
  for (long x : v) out.push_back(f.from_int(x));
  return out;
}

bool poly_is(const CurveModel& c, const Field& f, std::initializer_list<long> ascending) {
  std::vector<Elem> want = elems(f, ascending);
  return std::vector<Elem>(c.poly().begin(), c.poly().end()) == want;
}

void check_round_trip(const CurveModel& c) {
  ModuliPoint p = moduli_point(c);
  ReconstructionResult r = reconstruct(p);
  REQUIRE(r.outcome == Outcome::Curve);
  REQUIRE(r.curve);
  CHECK(r.curve->field() == c.field());
  CHECK(moduli_point(*r.curve) == p);
  CHECK(r.group == classify_curve(c));
}

// Bolza model x^6 + a x^4 + b x^2 + 1 with the three degeneracy factors
// nonzero.
bool bolza_generic(long a, long b) {
  return a != b && a * a + a * b + b * b != 0 && -1125 + 4 * a * a * a + 110 * a * b - a * a * b * b + 4 * b * b * b != 0;
}

}  // namespace

TEST_CASE("explicit models") {
  CHECK(poly_is(family_model(AutGroup::D8, Q.from_int(2), Q), Q, {0, 2, 0, 1, 0, 1}));
  CHECK(poly_is(family_model(AutGroup::D12, Q.from_int(5), Q), Q, {5, 0, 0, 1, 0, 0, 1}));
  Field f3 = Field::prime(3);
  CHECK(poly_is(family_model(AutGroup::D12, f3.from_int(2), f3), f3, {1, 0, 1, 0, 1, 0, 2}));
  CHECK(poly_is(family_model(AutGroup::S4tilde, std::nullopt, Q), Q, {0, -1, 0, 0, 0, 1}));
  CHECK(poly_is(family_model(AutGroup::TwoD12, std::nullopt, Q), Q, {-1, 0, 0, 0, 0, 0, 1}));
  CHECK(poly_is(family_model(AutGroup::C10, std::nullopt, Q), Q, {-1, 0, 0, 0, 0, 1}));

  CHECK(test::error_of([] { family_model(AutGroup::D8, std::nullopt, Q); }) == Errc::BadParameter);
  CHECK(test::error_of([] { family_model(AutGroup::D8, Q.zero(), Q); }) == Errc::BadParameter);
  CHECK(test::error_of([] { family_model(AutGroup::D12, Q.from_rational(mpq_class(1, 4)), Q); }) ==
        Errc::BadParameter);
  CHECK(test::error_of([&] { family_model(AutGroup::D12, f3.zero(), f3); }) == Errc::BadParameter);
  CHECK(test::error_of([&] { family_model(AutGroup::TwoD12, std::nullopt, f3); }) == Errc::Unsupported);
  Field f5 = Field::prime(5);
  for (AutGroup g : {AutGroup::TwoD12, AutGroup::S4tilde, AutGroup::C10})
    CHECK(test::error_of([&] { family_model(g, std::nullopt, f5); }) == Errc::Unsupported);
  CHECK(test::error_of([] { family_model(AutGroup::C2, std::nullopt, Q); }) == Errc::WrongGroup);
  CHECK(test::error_of([] { family_model(AutGroup::V4, std::nullopt, Q); }) == Errc::WrongGroup);
}

TEST_CASE("reconstruction examples") {
  ReconstructionResult origin = reconstruct(ModuliPoint(Q, Q.zero(), Q.zero(), Q.zero()));
  REQUIRE(origin.outcome == Outcome::Curve);
  CHECK(origin.group == AutGroup::C10);
  CHECK(poly_is(*origin.curve, Q, {-1, 0, 0, 0, 0, 1}));

  CurveModel d8 = test::curve_of(Q, {0, 2, 0, 1, 0, 1});
  ReconstructionResult r = reconstruct(moduli_point(d8));
  REQUIRE(r.outcome == Outcome::Curve);
  CHECK(r.group == AutGroup::D8);
  CHECK(*r.curve == d8);

  check_round_trip(test::curve_of(Q, {1, 1, 0, 0, 0, 0, 1}));
  check_round_trip(test::curve_of(Field::prime(7), {1, 1, 0, 0, 0, 0, 1}));
  Field f3 = Field::prime(3);
  check_round_trip(test::curve_of(f3, {1, 0, 1, 0, 1, 0, 2}));
}

TEST_CASE("the V4 construction") {
  CurveModel bolza = test::curve_of(Q, {1, 0, 2, 0, 1, 0, 1});
  ModuliPoint p = moduli_point(bolza);
  CurveModel c = v4_reconstruct(p);
  CHECK(moduli_point(c) == p);
  CHECK(c.field() == Q);
  CHECK(test::error_of([] { v4_reconstruct(moduli_point(test::curve_of(Q, {0, 2, 0, 1, 0, 1}))); }) ==
        Errc::WrongGroup);
  CHECK(test::error_of([] { v4_reconstruct(moduli_point(test::curve_of(Q, {1, 1, 0, 0, 0, 0, 1}))); }) ==
        Errc::WrongGroup);

  std::mt19937_64 gen(1);
  int done = 0;
  while (done < 100) {
    long a = test::uniform(gen, -30, 30), b = test::uniform(gen, -30, 30);
    if (!bolza_generic(a, b)) continue;
    CurveModel m = test::curve_of(Q, {1, 0, b, 0, a, 0, 1});
    ModuliPoint q = moduli_point(m);
    REQUIRE(classify_point(q) == AutGroup::V4);
    CHECK(moduli_point(v4_reconstruct(q)) == q);
    ++done;
  }
  for (long pr : {7, 11, 13}) {
    Field f = Field::prime(pr);
    for (long a = 0; a < pr; ++a)
      for (long b = 0; b < pr; ++b) {
        if (test::error_of([&] { test::curve_of(f, {1, 0, b, 0, a, 0, 1}); })) continue;
        ModuliPoint q = moduli_point(test::curve_of(f, {1, 0, b, 0, a, 0, 1}));
        if (classify_point(q) != AutGroup::V4) continue;
        CHECK(moduli_point(v4_reconstruct(q)) == q);
      }
  }
}

TEST_CASE("round trips of random curves") {
  std::mt19937_64 gen(2);
  for (long p : {7, 11, 13}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 300; ++i) check_round_trip(test::random_curve(gen, f));
  }
  for (int i = 0; i < 50; ++i) check_round_trip(test::random_curve(gen, Q, 3));
}

TEST_CASE("family parameters survive the round trip") {
  std::mt19937_64 gen(3);
  auto trip = [](const Field& f, AutGroup g, const Elem& t) {
    Family fam = g == AutGroup::D8 ? Family::D8 : Family::D12;
    return t_invariant(moduli_point(family_model(g, t, f)), fam);
  };
  for (AutGroup g : {AutGroup::D8, AutGroup::D12}) {
    for (int i = 0; i < 50; ++i) {
      Elem t = Q.from_rational(mpq_class(test::uniform(gen, -99, 99), test::uniform(gen, 1, 20)));
      if (t.is_zero() || t == Q.from_rational(mpq_class(1, 4))) continue;
      CHECK(trip(Q, g, t) == t);
    }
    for (long p : {3, 5, 7}) {
      Field f = Field::prime(p);
      for (long v = 1; v < p; ++v) {
        Elem t = f.from_int(v);
        bool excluded = t == f.one() / f.from_int(4) && !(p == 3 && g == AutGroup::D12);
        if (excluded) continue;
        CurveModel m = family_model(g, t, f);
        ModuliPoint pt = moduli_point(m);
        // Special points sit on the families; they are classified first.
        if (p != 5 && classify_point(pt) != g) continue;
        CHECK(trip(f, g, t) == t);
      }
    }
  }
}

TEST_CASE("obstructed points over Q") {
  ModuliPoint p = ModuliPoint::parse(Q, "1,2,3");
  CHECK(classify_point(p) == AutGroup::C2);
  ReconstructionResult r = reconstruct(p);
  REQUIRE(r.outcome == Outcome::Obstructed);
  CHECK(r.group == AutGroup::C2);
  CHECK(!r.curve);
  REQUIRE(r.obstruction.places.size() == 2);
  CHECK(r.obstruction.places[0] == Place{mpz_class(3)});
  CHECK(r.obstruction.places[1] == Place{mpz_class(1873889)});
  CHECK(!conic_point(mestre_data_from_invariants(minimal_lift(p)).conic));
}

TEST_CASE("unsupported characteristics") {
  Field f5 = Field::prime(5);
  ReconstructionResult r = reconstruct(moduli_point(test::curve_of(f5, {1, 1, 0, 0, 0, 0, 1})));
  CHECK(r.outcome == Outcome::Unsupported);
  CHECK(!r.reason.empty());
  CHECK(reconstruct(ModuliPoint(f5, f5.zero(), f5.zero(), f5.zero())).outcome == Outcome::Unsupported);
  CHECK(test::error_of([&] { mestre_reconstruct(ModuliPoint(f5, f5.one(), f5.one(), f5.one())); }) ==
        Errc::Unsupported);
  Field f3 = Field::prime(3);
  CHECK(reconstruct(moduli_point(test::curve_of(f3, {1, 1, 0, 0, 0, 0, 1}))).outcome == Outcome::Unsupported);
}
