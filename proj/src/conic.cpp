#include "g2/conic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "g2/arith.hpp"

namespace g2 {

namespace {

Elem bilinear(const Conic& c, const Point3& u, const Point3& v) {
  Elem acc = c.field.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!c.a[i][j].is_zero()) acc += c.a[i][j] * u[i] * v[j];
  return acc;
}

Point3 zero_point(const Field& f) { return {f.zero(), f.zero(), f.zero()}; }

// Least root of a z^2 + b z + c over F_p, or of the linear/constant
// degenerations; z = 0 when the polynomial vanishes identically.
std::optional<Elem> least_root(const Field& f, const Elem& a, const Elem& b, const Elem& c) {
  if (a.is_zero()) {
    if (!b.is_zero()) return -c / b;
    if (c.is_zero()) return f.zero();
    return std::nullopt;
  }
  Elem disc = b * b - f.from_int(4) * a * c;
  auto s = sqrt_in_field(f, disc);
  if (!s) return std::nullopt;
  Elem two_a = f.from_int(2) * a;
  Elem r1 = (-b + *s) / two_a, r2 = (-b - *s) / two_a;
  return std::min(r1, r2);
}

std::optional<Point3> point_mod_p(const Conic& c) {
  const Field& f = c.field;
  const auto& a = c.a;
  const Elem two = f.from_int(2);
  const std::uint32_t p = f.characteristic();
  // (1, y, z)
  for (std::uint32_t yi = 0; yi < p; ++yi) {
    Elem y = f.from_int(yi);
    Elem qa = a[2][2];
    Elem qb = two * (a[0][2] + a[1][2] * y);
    Elem qc = a[0][0] + two * a[0][1] * y + a[1][1] * y * y;
    if (auto z = least_root(f, qa, qb, qc)) return Point3{f.one(), y, *z};
  }
  // (0, 1, z)
  if (auto z = least_root(f, a[2][2], two * a[1][2], a[1][1])) return Point3{f.zero(), f.one(), *z};
  if (a[2][2].is_zero()) return Point3{f.zero(), f.zero(), f.one()};
  return std::nullopt;
}

// Integer z with z^2 = a x^2 + b y^2 nontrivially; a, b squarefree nonzero.
std::optional<std::array<mpz_class, 3>> legendre_solve(mpz_class a, mpz_class b) {
  if (a < 0 && b < 0) return std::nullopt;
  if (a == 1) return std::array<mpz_class, 3>{1, 0, 1};
  if (b == 1) return std::array<mpz_class, 3>{0, 1, 1};
  if (a + b == 0) return std::array<mpz_class, 3>{1, 1, 0};
  bool swapped = false;
  if (abs(a) > abs(b)) {
    std::swap(a, b);
    swapped = true;
  }
  // |b| >= 2 here.
  auto t0 = arith::sqrt_mod_squarefree(a, b);
  if (!t0) return std::nullopt;
  mpz_class m = abs(b);
  mpz_class t = *t0 % m;
  if (2 * t > m) t -= m;
  mpz_class q = (t * t - a);
  // q != 0 since a is squarefree and not 1.
  mpz_class qb = q / b;
  arith::SquarefreeSplit sp = arith::squarefree_split(qb);
  auto sub = legendre_solve(a, sp.core);
  if (!sub) return std::nullopt;
  const auto& [x1, y1, z1] = *sub;
  std::array<mpz_class, 3> out{t * x1 + z1, sp.core * sp.square * y1, t * z1 + a * x1};
  if (swapped) std::swap(out[0], out[1]);
  return out;
}

// Makes the vector integral and primitive with a positive first nonzero entry.
Point3 primitive(const Point3& v) {
  const Field q = Field::rationals();
  mpz_class l = 1, g = 0;
  for (const Elem& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
  std::array<mpz_class, 3> n;
  for (int i = 0; i < 3; ++i) {
    n[i] = mpz_class(v[i].rational() * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
  }
  if (g == 0) return v;
  for (auto& x : n) x /= g;
  for (const auto& x : n) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : n) y = -y;
    break;
  }
  return {q.from_mpz(n[0]), q.from_mpz(n[1]), q.from_mpz(n[2])};
}

struct IntegralDiagonal {
  Diagonalization diag;
  std::array<mpz_class, 3> core;  // squarefree classes of the diagonal entries
};

IntegralDiagonal integral_diagonal(const Conic& c) {
  if (!c.field.is_rationals()) throw Error(Errc::WrongCharacteristic, "rational conic expected");
  if (conic_det(c).is_zero()) throw Error(Errc::DegenerateConic, "conic determinant is 0");
  IntegralDiagonal out{diagonalize(c), {}};
  // core(d_i) = core(P_{i-1} P_i) for the partial products P_i = d_0 ... d_i,
  // which are minors of c and factor more easily than the d_i.
  using Exponents = std::map<mpz_class, long>;
  auto exponents = [](const mpq_class& x) {
    Exponents e;
    for (const auto& [p, k] : arith::factorize(x.get_num())) e[p] += k;
    for (const auto& [p, k] : arith::factorize(x.get_den())) e[p] -= k;
    return e;
  };
  Exponents prev;
  mpq_class prod = 1;
  for (int i = 0; i < 3; ++i) {
    const mpq_class& d = out.diag.diag[i].rational();
    prod *= d;
    Exponents cur = exponents(prod);
    mpz_class core = sgn(d);
    Exponents sum = cur;
    for (const auto& [p, k] : prev) sum[p] += k;
    for (const auto& [p, k] : sum)
      if (k % 2) core *= p;
    out.core[i] = core;
    prev = std::move(cur);
  }
  return out;
}

}  // namespace

// ----------------------------------------------------------------- types

Conic::Conic(Field f) : field(f) {
  for (auto& row : a) row.fill(f.zero());
}

Conic Conic::from_upper(Field f, const std::array<Elem, 6>& u) {
  Conic c(f);
  c.a[0][0] = u[0];
  c.a[0][1] = c.a[1][0] = u[1];
  c.a[0][2] = c.a[2][0] = u[2];
  c.a[1][1] = u[3];
  c.a[1][2] = c.a[2][1] = u[4];
  c.a[2][2] = u[5];
  return c;
}

Elem Conic::eval(const Point3& y) const { return bilinear(*this, y, y); }

bool Conic::is_symmetric() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

std::array<Elem, 6> Conic::upper() const { return {a[0][0], a[0][1], a[0][2], a[1][1], a[1][2], a[2][2]}; }

CubicForm::CubicForm(Field f) : field(f) {
  for (auto& m : a)
    for (auto& row : m) row.fill(f.zero());
}

void CubicForm::set(int i, int j, int k, const Elem& v) {
  a[i][j][k] = a[i][k][j] = a[j][i][k] = a[j][k][i] = a[k][i][j] = a[k][j][i] = v;
}

Elem CubicForm::eval(const Point3& y) const {
  Elem acc = field.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!a[i][j][k].is_zero()) acc += a[i][j][k] * y[i] * y[j] * y[k];
  return acc;
}

bool CubicForm::is_symmetric() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Elem& v = a[i][j][k];
        if (v != a[i][k][j] || v != a[j][i][k] || v != a[j][k][i] || v != a[k][i][j] || v != a[k][j][i])
          return false;
      }
  return true;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
  return a.prime < b.prime;
}

// ------------------------------------------------------------ operations

Elem conic_det(const Conic& c) {
  const auto& a = c.a;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Diagonalization diagonalize(const Conic& c) {
  const Field& f = c.field;
  std::array<Point3, 3> basis;
  for (int i = 0; i < 3; ++i) {
    basis[i] = zero_point(f);
    basis[i][i] = f.one();
  }
  for (int i = 0; i < 3; ++i) {
    if (c.eval(basis[i]).is_zero()) {
      int swap_with = -1;
      for (int j = i + 1; j < 3 && swap_with < 0; ++j)
        if (!c.eval(basis[j]).is_zero()) swap_with = j;
      if (swap_with >= 0) {
        std::swap(basis[i], basis[swap_with]);
      } else {
        for (int j = i + 1; j < 3; ++j) {
          if (!bilinear(c, basis[i], basis[j]).is_zero()) {
            for (int k = 0; k < 3; ++k) basis[i][k] += basis[j][k];
            break;
          }
        }
      }
    }
    Elem qi = c.eval(basis[i]);
    if (qi.is_zero()) continue;  // radical direction
    for (int j = i + 1; j < 3; ++j) {
      Elem factor = bilinear(c, basis[i], basis[j]) / qi;
      if (factor.is_zero()) continue;
      for (int k = 0; k < 3; ++k) basis[j][k] -= factor * basis[i][k];
    }
  }
  Diagonalization out;
  for (int i = 0; i < 3; ++i) out.diag[i] = c.eval(basis[i]);
  out.basis = basis;
  return out;
}

namespace {

// Integral primitive multiple of a rational conic.
Conic primitive_conic(const Conic& c) {
  mpz_class l = 1, g = 0;
  for (const auto& row : c.a)
    for (const Elem& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
  for (const auto& row : c.a)
    for (const Elem& e : row) {
      mpz_class n(e.rational() * l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  Conic out(c.field);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a[i][j] = c.field.from_rational(c.a[i][j].rational() * l / g);
  return out;
}

// Conic in the coordinates (y_s, y_{s+1}, y_{s+2}) (indices mod 3).
Conic rotated(const Conic& c, int s) {
  Conic out(c.field);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.a[i][j] = c.a[(i + s) % 3][(j + s) % 3];
  return out;
}

// Runs fn on the three coordinate rotations of the primitive conic until one
// stays within the factorization limit.
template <class Fn>
auto over_rotations(const Conic& c, Fn fn) {
  Conic base = primitive_conic(c);
  for (int s = 0;; ++s) {
    try {
      return fn(rotated(base, s), s);
    } catch (const Error& e) {
      if (e.code() != Errc::FactorizationLimit || s == 2) throw;
    }
  }
}

std::optional<Point3> rational_point(const Conic& c);
BrauerObstruction rational_obstruction(const Conic& c);

}  // namespace

std::optional<Point3> conic_point(const Conic& c) {
  if (conic_det(c).is_zero()) throw Error(Errc::DegenerateConic, "conic determinant is 0");
  if (!c.field.is_rationals()) {
    auto p = point_mod_p(c);
    if (!p) throw Error(Errc::VerificationFailed, "no point on a nondegenerate conic over " + c.field.name());
    return p;
  }
  auto pt = over_rotations(c, [](const Conic& r, int s) -> std::optional<Point3> {
    auto p = rational_point(r);
    if (!p) return p;
    Point3 back = *p;
    for (int i = 0; i < 3; ++i) back[(i + s) % 3] = (*p)[i];
    return back;
  });
  if (pt && !c.eval(*pt).is_zero()) throw Error(Errc::VerificationFailed, "Legendre descent produced a non-point");
  return pt;
}

BrauerObstruction conic_obstruction(const Conic& c) {
  if (!c.field.is_rationals()) throw Error(Errc::WrongCharacteristic, "rational conic expected");
  if (conic_det(c).is_zero()) throw Error(Errc::DegenerateConic, "conic determinant is 0");
  return over_rotations(c, [](const Conic& r, int) { return rational_obstruction(r); });
}

namespace {

std::optional<Point3> rational_point(const Conic& c) {
  const Field q = Field::rationals();
  IntegralDiagonal d = integral_diagonal(c);
  // sum_i diag_i z_i^2; diag_i = core_i * s_i^2 for rational s_i, so with
  // w_i = s_i z_i the form is sum core_i w_i^2.
  std::array<mpq_class, 3> s;
  for (int i = 0; i < 3; ++i) {
    mpq_class ratio = d.diag.diag[i].rational() / d.core[i];
    // ratio is a rational square.
    mpz_class n, m;
    mpz_sqrt(n.get_mpz_t(), ratio.get_num_mpz_t());
    mpz_sqrt(m.get_mpz_t(), ratio.get_den_mpz_t());
    s[i] = mpq_class(n, m);
  }
  // Pairwise coprime cores: core_a w_a^2 + core_b w_b^2 with g = gcd(core_a, core_b)
  // becomes (core_a/g)(g w_a)^2 + (core_b/g)(g w_b)^2 after multiplying by g.
  std::array<mpz_class, 3> k = d.core;
  std::array<mpq_class, 3> scale{1, 1, 1};  // w_i = scale_i * v_i
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < 3 && !changed; ++i)
      for (int j = i + 1; j < 3 && !changed; ++j) {
        mpz_class g = gcd(k[i], k[j]);
        if (g == 1) continue;
        int l = 3 - i - j;
        k[i] /= g;
        k[j] /= g;
        scale[i] /= g;
        scale[j] /= g;
        arith::SquarefreeSplit sp = arith::squarefree_split(k[l] * g);
        k[l] = sp.core;
        scale[l] /= sp.square;
        changed = true;
      }
  }
  // k0 v0^2 + k1 v1^2 + k2 v2^2 = 0  <=>  Z^2 = (-k0 k2) X^2 + (-k1 k2) Y^2
  // with v = (X, Y, Z / k2).
  auto sol = legendre_solve(-k[0] * k[2], -k[1] * k[2]);
  if (!sol) return std::nullopt;
  std::array<mpq_class, 3> v{mpq_class((*sol)[0]), mpq_class((*sol)[1]), mpq_class((*sol)[2], k[2])};
  v[2].canonicalize();
  Point3 out = zero_point(q);
  for (int i = 0; i < 3; ++i) {
    mpq_class zi = v[i] * scale[i] / s[i];
    Elem ze = q.from_rational(zi);
    for (int r = 0; r < 3; ++r) out[r] += ze * d.diag.basis[i][r];
  }
  return primitive(out);
}

}  // namespace

int hilbert_symbol(const mpq_class& a_in, const mpq_class& b_in, const Place& v) {
  if (sgn(a_in) == 0 || sgn(b_in) == 0) throw Error(Errc::BadParameter, "Hilbert symbol of 0");
  if (v.is_infinite()) return (sgn(a_in) < 0 && sgn(b_in) < 0) ? -1 : 1;
  mpz_class a = a_in.get_num() * a_in.get_den();
  mpz_class b = b_in.get_num() * b_in.get_den();
  const mpz_class& p = v.prime;
  auto split = [&](mpz_class x, unsigned long& e) {
    e = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      x /= p;
      ++e;
    }
    return x;
  };
  unsigned long alpha, beta;
  mpz_class u = split(a, alpha), w = split(b, beta);
  if (p == 2) {
    auto eps = [](const mpz_class& x) {
      mpz_class r = x % 4;
      if (r < 0) r += 4;
      return r == 3 ? 1 : 0;
    };
    auto omega = [](const mpz_class& x) {
      mpz_class r = x % 8;
      if (r < 0) r += 8;
      return (r == 3 || r == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(w) + static_cast<int>(alpha % 2) * omega(w) + static_cast<int>(beta % 2) * omega(u);
    return e % 2 ? -1 : 1;
  }
  int sign = 1;
  mpz_class half = (p - 1) / 2;
  if ((alpha % 2) && (beta % 2) && mpz_odd_p(half.get_mpz_t())) sign = -sign;
  if (beta % 2) sign *= arith::legendre(u, p);
  if (alpha % 2) sign *= arith::legendre(w, p);
  return sign;
}

namespace {

BrauerObstruction rational_obstruction(const Conic& c) {
  IntegralDiagonal d = integral_diagonal(c);
  const auto& k = d.core;
  mpq_class a = mpq_class(-k[0] * k[2]), b = mpq_class(-k[1] * k[2]);
  std::set<mpz_class> primes{mpz_class(2)};
  for (const auto& x : k)
    for (const auto& [p, e] : arith::factorize(x)) primes.insert(p);
  BrauerObstruction out;
  for (const auto& p : primes)
    if (hilbert_symbol(a, b, Place{p}) == -1) out.places.push_back(Place{p});
  if (hilbert_symbol(a, b, Place::infinity()) == -1) out.places.push_back(Place::infinity());
  std::sort(out.places.begin(), out.places.end());
  return out;
}

}  // namespace

Parametrization conic_parametrize(const Conic& c, const Point3& p) {
  const Field& f = c.field;
  if (conic_det(c).is_zero()) throw Error(Errc::DegenerateConic, "conic determinant is 0");
  if (!c.eval(p).is_zero() || (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()))
    throw Error(Errc::PointNotOnConic, "base point is not on the conic");
  int lead = 0;
  while (p[lead].is_zero()) ++lead;
  std::array<Point3, 2> q;
  for (int n = 0, i = 0; i < 3; ++i) {
    if (i == lead) continue;
    q[n] = zero_point(f);
    q[n][i] = f.one();
    ++n;
  }
  // V = lambda Q1 + mu Q2; X = L(V) P - 2 B(P, V) V.
  Elem l11 = c.eval(q[0]), l12 = bilinear(c, q[0], q[1]), l22 = c.eval(q[1]);
  Elem b1 = bilinear(c, p, q[0]), b2 = bilinear(c, p, q[1]);
  BinaryForm lv(f, std::vector<Elem>{l11, f.from_int(2) * l12, l22});
  BinaryForm bv(f, std::vector<Elem>{b1, b2});
  const Elem two = f.from_int(2);
  Parametrization out{{BinaryForm(f, 2), BinaryForm(f, 2), BinaryForm(f, 2)}};
  for (int r = 0; r < 3; ++r) {
    BinaryForm vr(f, std::vector<Elem>{q[0][r], q[1][r]});
    out.t[r] = p[r] * lv - two * (bv * vr);
  }
  if (f.is_rationals()) {
    mpz_class l = 1, g = 0;
    for (const auto& t : out.t)
      for (const Elem& e : t.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
    for (auto& t : out.t) {
      t = f.from_mpz(l) * t;
      for (const Elem& e : t.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.rational().get_num_mpz_t());
    }
    if (g != 0)
      for (auto& t : out.t) t = f.from_rational(mpq_class(1, g)) * t;
  }
  return out;
}

BinaryForm cubic_pullback(const CubicForm& m, const Parametrization& t) {
  const Field& f = m.field;
  BinaryForm out(f, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BinaryForm tij = t.t[i] * t.t[j];
      for (int k = 0; k < 3; ++k)
        if (!m.a[i][j][k].is_zero()) out += m.a[i][j][k] * (tij * t.t[k]);
    }
  return out;
}

}  // namespace g2
