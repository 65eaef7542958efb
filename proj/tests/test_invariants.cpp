#include <random>

#include "doctest.h"
#include "g2/expressions.hpp"
#include "g2/invariants.hpp"
#include "support.hpp"

using namespace g2;
using test::curve_of;

namespace {

const Field Q = Field::rationals();

BinaryForm reduce_form(const BinaryForm& f, const Field& target) {
  std::vector<Elem> c;
  for (const Elem& e : f.coeffs()) c.push_back(target.from_rational(e.rational()));
  return BinaryForm(target, std::move(c));
}

std::array<Elem, 4> js(const IgusaVector& j) { return {j.J2, j.J4, j.J6, j.J10}; }

ModuliPoint random_point(std::mt19937_64& rng, const Field& f) {
  // Mix zero patterns so every branch is exercised.
  auto pick = [&]() { return test::uniform(rng, 0, 3) == 0 ? f.zero() : test::random_elem(rng, f); };
  return ModuliPoint(f, pick(), pick(), pick());
}

}  // namespace

TEST_CASE("Clebsch invariants of x1^6 + x2^6") {
  ClebschVector c = clebsch_invariants(BinaryForm::from_ints(Q, {1, 0, 0, 0, 0, 0, 1}));
  CHECK(c.c2 == Q.from_int(2));
}

TEST_CASE("Clebsch invariants: SL2 invariance and homogeneity") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"q", "fp:13"}) {
    Field f = Field::parse(spec);
    for (int i = 0; i < 20; ++i) {
      BinaryForm F = test::random_curve_form(rng, f, 6);
      Elem a = test::random_elem(rng, f, 4), b = test::random_elem(rng, f, 4), c = test::random_elem(rng, f, 4);
      // det = 1 via an elementary product.
      GL2Matrix m = compose(GL2Matrix{f.one(), a, f.zero(), f.one()}, GL2Matrix{f.one(), f.zero(), b, f.one()});
      m = compose(m, GL2Matrix{f.one(), c, f.zero(), f.one()});
      REQUIRE(m.det() == f.one());
      ClebschVector c0 = clebsch_invariants(F), c1 = clebsch_invariants(gl2_transform(F, m));
      CHECK(c0 == c1);
      ClebschVector c3 = clebsch_invariants(f.from_int(3) * F);
      CHECK(c3.c2 == f.from_int(3).pow(2) * c0.c2);
      CHECK(c3.c4 == f.from_int(3).pow(4) * c0.c4);
      CHECK(c3.c6 == f.from_int(3).pow(6) * c0.c6);
      CHECK(c3.c10 == f.from_int(3).pow(10) * c0.c10);
    }
  }
}

TEST_CASE("Clebsch invariants need characteristic > 5") {
  for (const char* spec : {"fp:3", "fp:5"}) {
    Field f = Field::parse(spec);
    BinaryForm F = BinaryForm::from_ints(f, {1, 0, 0, 0, 0, 1, 1});
    CHECK(test::error_of([&] { clebsch_invariants(F); }) == Errc::SmallCharacteristic);
    CHECK(test::error_of([&] { r_invariant(F); }) == Errc::SmallCharacteristic);
  }
}

TEST_CASE("R vanishes exactly on models with an extra involution") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    long a = test::uniform(rng, -9, 9), b = test::uniform(rng, -9, 9);
    BinaryForm F = BinaryForm::from_ints(Q, {1, 0, a, 0, b, 0, 1});
    if (form_discriminant(F).is_zero()) continue;
    CHECK(r_invariant(F).is_zero());
  }
  CHECK(!r_invariant(curve_to_form(curve_of(Q, {1, 1, 0, 0, 0, 0, 1}))).is_zero());
}

TEST_CASE("R has odd weight") {
  std::mt19937_64 rng(13);
  GL2Matrix flip{Q.one(), Q.zero(), Q.zero(), Q.from_int(-1)};
  for (int i = 0; i < 10; ++i) {
    BinaryForm F = test::random_curve_form(rng, Q, 6);
    CHECK(r_invariant(gl2_transform(F, flip)) == -r_invariant(F));
  }
}

TEST_CASE("I10 = 2^12 J10 is the discriminant") {
  std::mt19937_64 rng(14);
  for (const char* spec : {"q", "fp:3", "fp:5", "fp:7"}) {
    Field f = Field::parse(spec);
    for (int i = 0; i < 100; ++i) {
      BinaryForm F = test::random_form(rng, f, 6);
      CHECK(f.from_int(4096) * igusa_even(F).J10 == form_discriminant(F));
    }
  }
}

TEST_CASE("J reduces well mod 3 and mod 5") {
  std::mt19937_64 rng(15);
  for (const char* spec : {"fp:3", "fp:5"}) {
    Field fp = Field::parse(spec);
    for (int i = 0; i < 100; ++i) {
      BinaryForm F = test::random_form(rng, Q, 6);
      std::array<Elem, 4> over_q = js(igusa_even(F)), mod_p = js(igusa_even(reduce_form(F, fp)));
      for (int k = 0; k < 4; ++k) CHECK(fp.from_rational(over_q[k].rational()) == mod_p[k]);
    }
  }
}

TEST_CASE("J homogeneity") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    BinaryForm F = test::random_form(rng, Q, 6);
    IgusaVector j = igusa_even(F), j2 = igusa_even(Q.from_int(2) * F);
    CHECK(j2.J2 == Q.from_int(4) * j.J2);
    CHECK(j2.J4 == Q.from_int(16) * j.J4);
    CHECK(j2.J6 == Q.from_int(64) * j.J6);
    CHECK(j2.J10 == Q.from_int(1024) * j.J10);
  }
}

TEST_CASE("igusa_invariants carries R where it is defined") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"q", "fp:7", "fp:101"}) {
    Field f = Field::parse(spec);
    for (int i = 0; i < 10; ++i) {
      BinaryForm F = test::random_curve_form(rng, f, 6);
      IgusaVector j = igusa_invariants(F);
      REQUIRE(j.R);
      REQUIRE(j.R_squared);
      CHECK(*j.R == r_invariant(F));
      CHECK(*j.R * *j.R == *j.R_squared);
    }
  }
  for (const char* spec : {"fp:3", "fp:5"}) {
    IgusaVector j = igusa_invariants(BinaryForm::from_ints(Field::parse(spec), {1, 0, 0, 0, 0, 1, 1}));
    CHECK(!j.R);
  }
}

TEST_CASE("absolute invariants") {
  auto J = [](long a, long b, long c, long d) {
    return IgusaVector{Q.from_int(a), Q.from_int(b), Q.from_int(c), Q.from_int(d), std::nullopt, std::nullopt};
  };
  CHECK(absolute_invariants(J(1, 1, 1, 1)) == ModuliPoint(Q, Q.one(), Q.one(), Q.one()));
  CHECK(absolute_invariants(J(0, 1, 2, 1)) == ModuliPoint(Q, Q.zero(), Q.one(), Q.from_int(2)));
  CHECK(absolute_invariants(J(0, 0, 2, 8)) == ModuliPoint(Q, Q.zero(), Q.zero(), Q.parse_elem("1/16")));
  CHECK(test::error_of([&] { absolute_invariants(J(1, 2, 3, 0)); }) == Errc::NotACurve);
}

TEST_CASE("lift_point") {
  auto P = [](long a, long b, long c) { return ModuliPoint(Q, Q.from_int(a), Q.from_int(b), Q.from_int(c)); };
  auto check = [](const IgusaVector& j, long a, long b, long c, long d) {
    CHECK(j.J2 == Q.from_int(a));
    CHECK(j.J4 == Q.from_int(b));
    CHECK(j.J6 == Q.from_int(c));
    CHECK(j.J10 == Q.from_int(d));
  };
  check(lift_point(P(5, 3, 2)), 5, 15, 50, 625);
  check(lift_point(P(0, 3, 2)), 0, 3, 6, 9);
  check(lift_point(P(0, 0, 5)), 0, 0, 25, 125);
  check(lift_point(P(0, 0, 0)), 0, 0, 0, 1);
}

TEST_CASE("absolute_invariants inverts lift_point") {
  std::mt19937_64 rng(18);
  for (const char* spec : {"q", "fp:7", "fp:13"}) {
    Field f = Field::parse(spec);
    for (int i = 0; i < 1000; ++i) {
      ModuliPoint p = random_point(rng, f);
      CHECK(absolute_invariants(lift_point(p)) == p);
    }
  }
}

TEST_CASE("minimal lift is an integral representative of the same point") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    ModuliPoint p(Q, Q.from_int(test::uniform(rng, -50, 50)) / Q.from_int(test::uniform(rng, 1, 9)),
                  test::random_elem(rng, Q), test::random_elem(rng, Q));
    if (p.j1.is_zero()) continue;
    IgusaVector j = minimal_lift(p);
    CHECK(absolute_invariants(j) == p);
    for (const Elem& e : js(j)) CHECK(e.rational().get_den() == 1);
  }
  // No prime q has q^w | J_w for every weight w (J2, J4, J6, J10 = 1, 2, 3, 5).
  IgusaVector m = minimal_lift(moduli_point(curve_of(Q, {1, 1, 0, 0, 0, 0, 1})));
  const std::array<int, 4> weight{1, 2, 3, 5};
  for (long q : {2, 3, 5, 7, 11, 13}) {
    bool all = true;
    std::array<Elem, 4> v = js(m);
    for (int k = 0; k < 4; ++k) {
      mpz_class qw;
      mpz_ui_pow_ui(qw.get_mpz_t(), q, weight[k]);
      if (!v[k].is_zero() && !mpz_divisible_p(v[k].rational().get_num_mpz_t(), qw.get_mpz_t())) all = false;
    }
    CHECK(!all);
  }
}

TEST_CASE("rescale_invariants") {
  IgusaVector one{Q.one(), Q.one(), Q.one(), Q.one(), std::nullopt, std::nullopt};
  CHECK(rescale_invariants(one, Q.one()) == one);
  IgusaVector r = rescale_invariants(one, Q.from_int(2));
  CHECK(js(r) == std::array<Elem, 4>{Q.from_int(2), Q.from_int(4), Q.from_int(8), Q.from_int(32)});
  CHECK(test::error_of([&] { rescale_invariants(one, Q.zero()); }) == Errc::ZeroScale);
  // R_squared scales by d^15, R survives when d is a square.
  IgusaVector withr{Q.one(), Q.one(), Q.one(), Q.one(), Q.from_int(4), Q.from_int(2)};
  IgusaVector r4 = rescale_invariants(withr, Q.from_int(4));
  CHECK(*r4.R_squared == Q.from_int(4).pow(16));
  CHECK(*r4.R == Q.from_int(2).pow(15) * Q.from_int(2));
  CHECK(*r4.R * *r4.R == *r4.R_squared);
  IgusaVector r2 = rescale_invariants(withr, Q.from_int(2));
  CHECK(!r2.R);
}

TEST_CASE("same_moduli") {
  CHECK(same_moduli(curve_of(Q, {-1, 0, 0, 0, 0, 0, 1}), curve_of(Q, {-2, 0, 0, 0, 0, 0, 2})));
  // f(x) = x^6 + x + 1 and f(x + 1).
  CHECK(same_moduli(curve_of(Q, {1, 1, 0, 0, 0, 0, 1}), curve_of(Q, {3, 7, 15, 20, 15, 6, 1})));
  CHECK(!same_moduli(curve_of(Q, {-1, 0, 0, 0, 0, 1}), curve_of(Q, {-1, 0, 0, 0, 0, 0, 1})));
}

TEST_CASE("moduli points are GL2 invariants") {
  std::mt19937_64 rng(20);
  for (const char* spec : {"q", "fp:3", "fp:5", "fp:11"}) {
    Field f = Field::parse(spec);
    for (int i = 0; i < 30; ++i) {
      BinaryForm F = test::random_curve_form(rng, f, 6);
      GL2Matrix m = test::random_gl2(rng, f, 3);
      CHECK(moduli_point(CurveModel::from_form(F)) == moduli_point(CurveModel::from_form(gl2_transform(F, m))));
    }
  }
}

TEST_CASE("barred conic and cubic at a sample point") {
  ClebschVector c{Q.one(), Q.one(), Q.one(), Q.one()};
  ConicCubicData d = v4_conic_cubic_data(c);
  CHECK(d.conic.a[0][0] == Q.parse_elem("7/3"));
  CHECK(d.conic.a[0][2].is_zero());
  CHECK(d.conic.a[1][2].is_zero());
  CHECK(d.conic.a[1][1] == c.c10);
  CHECK(d.cubic.a[0][0][0] == Q.parse_elem("16/675"));
  CHECK(d.conic.is_symmetric());
  CHECK(d.cubic.is_symmetric());
  // R enters abar_113 = -R/150 linearly.
  ConicCubicData dr = v4_conic_cubic_data(c, Q.from_int(300));
  CHECK(dr.cubic.a[0][0][2] == Q.from_int(-2));
  CHECK(dr.cubic.a[2][0][0] == Q.from_int(-2));
}
