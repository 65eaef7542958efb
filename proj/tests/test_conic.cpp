#include <random>
#include <set>

#include "doctest.h"
#include "g2/expressions.hpp"
#include "g2/reconstruct.hpp"
#include "support.hpp"

using namespace g2;

namespace {

const Field Q = Field::rationals();

Conic conic_of(const Field& f, std::initializer_list<long> upper) {
  std::array<Elem, 6> u;
  std::size_t i = 0;
  for (long v : upper) u[i++] = f.from_int(v);
  return Conic::from_upper(f, u);
}

Point3 point_of(const Field& f, long a, long b, long c) { return {f.from_int(a), f.from_int(b), f.from_int(c)}; }

Conic random_conic(std::mt19937_64& gen, const Field& f, long box = 10) {
  for (;;) {
    std::array<Elem, 6> u;
    for (auto& e : u) e = test::random_elem(gen, f, box);
    Conic c = Conic::from_upper(f, u);
    if (!conic_det(c).is_zero()) return c;
  }
}

// L(T1, T2, T3) as a quartic form.
BinaryForm substituted(const Conic& c, const Parametrization& t) {
  BinaryForm out(c.field, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out += c.a[i][j] * (t.t[i] * t.t[j]);
  return out;
}

// Projective normalization: first nonzero coordinate is 1.
Point3 normalized(Point3 p) {
  for (const Elem& e : p)
    if (!e.is_zero()) {
      Elem inv = e.inverse();
      for (auto& x : p) x *= inv;
      return p;
    }
  return p;
}

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  for (mpz_class d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

int legendre(long a, long p) {
  long r = 1, b = ((a % p) + p) % p;
  for (long e = (p - 1) / 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(conic_det(conic_of(Q, {1, 0, 0, 1, 0, 1})).is_one());
  CHECK(conic_det(conic_of(Q, {1, 0, 0, -1, 0, 0})).is_zero());
  CHECK(conic_det(conic_of(Q, {2, 1, 0, 3, 1, 4})) == Q.from_int(18));
}

TEST_CASE("points on small conics") {
  Conic pyth = conic_of(Q, {1, 0, 0, 1, 0, -1});
  auto p = conic_point(pyth);
  REQUIRE(p);
  CHECK(pyth.eval(*p).is_zero());
  CHECK(!(p->at(0).is_zero() && p->at(1).is_zero() && p->at(2).is_zero()));
  CHECK(conic_obstruction(pyth).trivial());

  Conic sum = conic_of(Q, {1, 0, 0, 1, 0, 1});
  CHECK(!conic_point(sum));
  BrauerObstruction ob = conic_obstruction(sum);
  REQUIRE(ob.places.size() == 2);
  CHECK(ob.places[0] == Place{mpz_class(2)});
  CHECK(ob.places[1].is_infinite());

  Field f7 = Field::prime(7);
  auto q = conic_point(conic_of(f7, {1, 0, 0, 1, 0, 1}));
  REQUIRE(q);
  CHECK(*q == point_of(f7, 1, 2, 3));

  CHECK(test::error_of([] { conic_point(conic_of(Q, {1, 0, 0, -1, 0, 0})); }) == Errc::DegenerateConic);
  CHECK(test::error_of([] { conic_obstruction(conic_of(Q, {0, 0, 0, 0, 0, 0})); }) == Errc::DegenerateConic);
  CHECK(test::error_of([&] { conic_obstruction(conic_of(f7, {1, 0, 0, 1, 0, 1})); }) ==
        Errc::WrongCharacteristic);
}

TEST_CASE("Hilbert symbols") {
  const Place two{mpz_class(2)}, inf = Place::infinity();
  CHECK(hilbert_symbol(-1, -1, two) == -1);
  CHECK(hilbert_symbol(-1, -1, inf) == -1);
  CHECK(hilbert_symbol(-1, -1, Place{mpz_class(3)}) == 1);
  for (long b : {-7, -2, 3, 10})
    for (const Place& v : {two, inf, Place{mpz_class(3)}, Place{mpz_class(5)}, Place{mpz_class(7)}})
      CHECK(hilbert_symbol(1, b, v) == 1);
  CHECK(hilbert_symbol(2, 7, Place{mpz_class(7)}) == 1);
  // (p u, b)_p = (b / p) for p odd and u, b units.
  std::mt19937_64 gen(1);
  for (long p : {3, 5, 7, 11, 13}) {
    for (int i = 0; i < 20; ++i) {
      long u = test::uniform(gen, 1, 50), b = test::uniform(gen, 1, 50);
      if (u % p == 0 || b % p == 0) continue;
      CHECK(hilbert_symbol(mpq_class(p * u), mpq_class(b), Place{mpz_class(p)}) == legendre(b, p));
      CHECK(hilbert_symbol(mpq_class(u, p), mpq_class(b), Place{mpz_class(p)}) == legendre(b, p));
    }
  }
  CHECK(hilbert_symbol(mpq_class(-3), mpq_class(-5), inf) == -1);
  CHECK(hilbert_symbol(mpq_class(-3), mpq_class(5), inf) == 1);
}

TEST_CASE("product formula") {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 200; ++i) {
    mpq_class a(test::uniform(gen, 1, 400) * (test::uniform(gen, 0, 1) ? 1 : -1), test::uniform(gen, 1, 30));
    mpq_class b(test::uniform(gen, 1, 400) * (test::uniform(gen, 0, 1) ? 1 : -1), test::uniform(gen, 1, 30));
    a.canonicalize();
    b.canonicalize();
    std::set<mpz_class> primes{2};
    for (const mpz_class& n : {a.get_num(), a.get_den(), b.get_num(), b.get_den()})
      for (const mpz_class& q : prime_factors(n)) primes.insert(q);
    int prod = hilbert_symbol(a, b, Place::infinity());
    for (const mpz_class& q : primes) prod *= hilbert_symbol(a, b, Place{q});
    CHECK(prod == 1);
    // Primes outside the set give +1.
    CHECK(hilbert_symbol(a, b, Place{mpz_class(1000003)}) == 1);
  }
}

TEST_CASE("obstruction is empty exactly when a point exists") {
  std::mt19937_64 gen(3);
  int with_point = 0, without = 0;
  for (int i = 0; i < 200; ++i) {
    Conic c = random_conic(gen, Q);
    auto p = conic_point(c);
    BrauerObstruction ob = conic_obstruction(c);
    CHECK(ob.places.size() % 2 == 0);
    CHECK(ob.trivial() == p.has_value());
    if (p) {
      ++with_point;
      CHECK(c.eval(*p).is_zero());
      mpz_class g = 0;
      for (const Elem& e : *p) {
        CHECK(e.rational().get_den() == 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.rational().get_num_mpz_t());
      }
      CHECK(g == 1);
    } else {
      ++without;
    }
  }
  CHECK(with_point > 0);
  CHECK(without > 0);
}

TEST_CASE("finite-field conics always have points") {
  std::mt19937_64 gen(4);
  for (long p : {3, 5, 7, 11, 13, 101}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 50; ++i) {
      Conic c = random_conic(gen, f);
      auto pt = conic_point(c);
      REQUIRE(pt);
      CHECK(c.eval(*pt).is_zero());
    }
  }
}

TEST_CASE("diagonalization") {
  std::mt19937_64 gen(5);
  for (const Field& f : {Q, Field::prime(7), Field::prime(11)}) {
    for (int i = 0; i < 30; ++i) {
      Conic c = random_conic(gen, f);
      Diagonalization d = diagonalize(c);
      for (int k = 0; k < 5; ++k) {
        std::array<Elem, 3> z{test::random_elem(gen, f), test::random_elem(gen, f), test::random_elem(gen, f)};
        Point3 y{f.zero(), f.zero(), f.zero()};
        Elem expect = f.zero();
        for (int r = 0; r < 3; ++r) {
          for (int s = 0; s < 3; ++s) y[s] += z[r] * d.basis[r][s];
          expect += d.diag[r] * z[r] * z[r];
        }
        CHECK(c.eval(y) == expect);
      }
    }
  }
}

TEST_CASE("parametrization") {
  Conic pyth = conic_of(Q, {1, 0, 0, 1, 0, -1});
  Parametrization t = conic_parametrize(pyth, point_of(Q, 1, 0, 1));
  CHECK(substituted(pyth, t).is_zero());
  for (const auto& form : t.t) CHECK(form.order() == 2);
  // Same image as (l^2 - m^2, 2 l m, l^2 + m^2) on many parameters.
  std::set<Point3> ours, classical;
  for (long l = -6; l <= 6; ++l)
    for (long m = -6; m <= 6; ++m) {
      if (l == 0 && m == 0) continue;
      Elem L = Q.from_int(l), M = Q.from_int(m);
      ours.insert(normalized({t.t[0].eval(L, M), t.t[1].eval(L, M), t.t[2].eval(L, M)}));
      classical.insert(normalized({L * L - M * M, Q.from_int(2) * L * M, L * L + M * M}));
    }
  std::size_t common = 0;
  for (const auto& p : classical) common += ours.count(p);
  CHECK(common > classical.size() / 2);

  CHECK(test::error_of([&] { conic_parametrize(pyth, point_of(Q, 1, 1, 1)); }) == Errc::PointNotOnConic);

  std::mt19937_64 gen(6);
  Field f11 = Field::prime(11);
  for (int i = 0; i < 100; ++i) {
    Conic c = random_conic(gen, f11);
    Parametrization pt = conic_parametrize(c, *conic_point(c));
    CHECK(substituted(c, pt).is_zero());
  }
  for (int i = 0; i < 30; ++i) {
    Conic c = random_conic(gen, Q, 6);
    auto p = conic_point(c);
    if (!p) continue;
    Parametrization pt = conic_parametrize(c, *p);
    CHECK(substituted(c, pt).is_zero());
    for (const auto& form : pt.t)
      for (const Elem& e : form.coeffs()) CHECK(e.rational().get_den() == 1);
  }
}

TEST_CASE("parametrization is onto the conic over small fields") {
  std::mt19937_64 gen(7);
  for (long p : {3, 5, 7, 11, 13}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 10; ++i) {
      Conic c = random_conic(gen, f);
      Parametrization t = conic_parametrize(c, *conic_point(c));
      std::set<Point3> image, points;
      for (long l = 0; l <= p; ++l) {
        Elem L = l < p ? f.from_int(l) : f.one(), M = l < p ? f.one() : f.zero();
        Point3 y{t.t[0].eval(L, M), t.t[1].eval(L, M), t.t[2].eval(L, M)};
        REQUIRE(!(y[0].is_zero() && y[1].is_zero() && y[2].is_zero()));
        image.insert(normalized(y));
      }
      for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
          for (const Point3& y : {point_of(f, 1, a, b), point_of(f, 0, 1, a), point_of(f, 0, 0, 1)})
            if (c.eval(y).is_zero()) points.insert(y);
      CHECK(points.size() == static_cast<std::size_t>(p + 1));
      CHECK(image == points);
    }
  }
}

TEST_CASE("cubic pullback") {
  CubicForm m(Q);
  m.set(0, 0, 0, Q.one());
  Parametrization t{{BinaryForm::from_ints(Q, {0, 1, 0}), BinaryForm::from_ints(Q, {1, 0, 0}),
                     BinaryForm::from_ints(Q, {0, 0, 1})}};
  CHECK(cubic_pullback(m, t) == BinaryForm::from_ints(Q, {0, 0, 0, 1, 0, 0, 0}));

  std::mt19937_64 gen(8);
  for (int i = 0; i < 20; ++i) {
    CubicForm cub(Q);
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b)
        for (int c = b; c < 3; ++c) cub.set(a, b, c, test::random_elem(gen, Q));
    CHECK(cub.is_symmetric());
    Parametrization r{{test::random_form(gen, Q, 2), test::random_form(gen, Q, 2), test::random_form(gen, Q, 2)}};
    BinaryForm s = cubic_pullback(cub, r);
    CHECK(s.order() == 6);
    Elem l = test::random_elem(gen, Q), mu = test::random_elem(gen, Q);
    CHECK(s.eval(l, mu) == cub.eval({r.t[0].eval(l, mu), r.t[1].eval(l, mu), r.t[2].eval(l, mu)}));
  }
}

TEST_CASE("Mestre pullback over F_7 recovers the moduli point") {
  std::mt19937_64 gen(9);
  Field f7 = Field::prime(7);
  int done = 0;
  for (int i = 0; i < 200 && done < 20; ++i) {
    CurveModel c = test::random_curve(gen, f7);
    BinaryForm F = curve_to_form(c);
    ConicCubicData d = mestre_data_from_invariants(igusa_even(F));
    if (conic_det(d.conic).is_zero()) continue;
    ++done;
    BinaryForm s = pullback_sextic(d, *conic_point(d.conic));
    REQUIRE(!form_discriminant(s).is_zero());
    CHECK(moduli_point(CurveModel::from_form(s)) == moduli_point(c));
  }
  CHECK(done == 20);
}
