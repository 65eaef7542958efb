#include "g2/binary_form.hpp"

namespace g2 {

namespace {

mpz_class falling(long n, long k) {
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_field(const Field& field, const Elem& e) {
  if (e.characteristic() != field.characteristic())
    throw Error(Errc::FieldMismatch, "coefficient not in " + field.name());
}

// d^a/dx1^a d^b/dx2^b F, with the integer multipliers folded in.
BinaryForm derivative(const BinaryForm& f, int a, int b) {
  const int n = f.order();
  if (a + b > n) return BinaryForm(f.field(), 0);
  BinaryForm out(f.field(), n - a - b);
  for (int i = b; i <= n - a; ++i) {
    if (f[i].is_zero()) continue;
    mpz_class mult = falling(n - i, a) * falling(i, b);
    out[i - b] = f[i] * f.field().from_mpz(mult);
  }
  return out;
}

// Determinant by Gaussian elimination; consumes the matrix.
Elem determinant(std::vector<std::vector<Elem>> a, const Field& field) {
  const std::size_t n = a.size();
  Elem det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Elem inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Elem factor = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

}  // namespace

BinaryForm::BinaryForm(Field field, int order) : field_(field) {
  if (order < 0) throw Error(Errc::BadParameter, "negative form order");
  coeffs_.assign(order + 1, field.zero());
}

BinaryForm::BinaryForm(Field field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::BadParameter, "form needs at least one coefficient");
  for (const Elem& e : coeffs_) check_field(field_, e);
}

BinaryForm BinaryForm::from_ints(Field field, std::initializer_list<long> coeffs) {
  std::vector<Elem> c;
  for (long v : coeffs) c.push_back(field.from_int(v));
  return BinaryForm(field, std::move(c));
}

bool BinaryForm::is_zero() const {
  for (const Elem& e : coeffs_)
    if (!e.is_zero()) return false;
  return true;
}

Elem BinaryForm::eval(const Elem& x1, const Elem& x2) const {
  // Horner in x1 / x2 homogenized.
  const int n = order();
  Elem acc = field_.zero();
  Elem x2pow = field_.one();
  std::vector<Elem> x1pow(n + 1, field_.one());
  for (int i = 1; i <= n; ++i) x1pow[i] = x1pow[i - 1] * x1;
  for (int i = 0; i <= n; ++i) {
    acc += coeffs_[i] * x1pow[n - i] * x2pow;
    x2pow *= x2;
  }
  return acc;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.order() != order()) throw Error(Errc::BadParameter, "adding forms of different order");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.order() != order()) throw Error(Errc::BadParameter, "subtracting forms of different order");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "form product");
  BinaryForm out(a.field(), a.order() + b.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

BinaryForm operator*(const Elem& s, BinaryForm a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k) {
  if (k < 0) throw Error(Errc::BadParameter, "negative transvectant index");
  if (f.field() != g.field()) throw Error(Errc::FieldMismatch, "transvectant");
  const Field& field = f.field();
  const int m = f.order(), n = g.order();
  if (k > m || k > n) return BinaryForm(field, 0);

  // norm = (m-k)!(n-k)!/(m!n!) = 1/(falling(m,k) falling(n,k)).
  mpz_class den = falling(m, k) * falling(n, k);
  Elem den_e = field.from_mpz(den);
  if (den_e.is_zero())
    throw Error(Errc::SmallCharacteristic,
                "transvectant denominator vanishes in " + field.name());

  BinaryForm acc(field, m + n - 2 * k);
  for (int j = 0; j <= k; ++j) {
    BinaryForm term = derivative(f, k - j, j) * derivative(g, j, k - j);
    Elem c = field.from_mpz(binom(k, j));
    if (j % 2) c = -c;
    acc += c * term;
  }
  return den_e.inverse() * acc;
}

GL2Matrix GL2Matrix::identity(const Field& field) {
  return {field.one(), field.zero(), field.zero(), field.one()};
}

GL2Matrix compose(const GL2Matrix& a, const GL2Matrix& b) {
  return {a.m * b.m + a.n * b.p, a.m * b.n + a.n * b.q,
          a.p * b.m + a.q * b.p, a.p * b.n + a.q * b.q};
}

BinaryForm gl2_transform(const BinaryForm& f, const GL2Matrix& mat) {
  if (mat.det().is_zero()) throw Error(Errc::SingularMatrix, "gl2_transform with det 0");
  const Field& field = f.field();
  const int n = f.order();
  BinaryForm u(field, std::vector<Elem>{mat.m, mat.n});  // m x1 + n x2
  BinaryForm v(field, std::vector<Elem>{mat.p, mat.q});  // p x1 + q x2
  std::vector<BinaryForm> upow{BinaryForm(field, std::vector<Elem>{field.one()})};
  std::vector<BinaryForm> vpow = upow;
  for (int i = 1; i <= n; ++i) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  BinaryForm out(field, n);
  for (int i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    out += f[i] * (upow[n - i] * vpow[i]);
  }
  return out;
}

Elem form_resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.field() != g.field()) throw Error(Errc::FieldMismatch, "resultant");
  const Field& field = f.field();
  const int m = f.order(), n = g.order();
  const int size = m + n;
  if (size == 0) return field.one();
  std::vector<std::vector<Elem>> s(size, std::vector<Elem>(size, field.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g[i];
  return determinant(std::move(s), field);
}

Elem form_discriminant(const BinaryForm& f) {
  if (f.order() != 6) throw Error(Errc::BadParameter, "form_discriminant needs order 6");
  const Field& field = f.field();
  if (field.characteristic() == 3) {
    // Res(F_x1, F_x2) vanishes identically mod 3; compute over Z instead.
    std::vector<Elem> lifted;
    for (const Elem& c : f.coeffs()) lifted.push_back(Field::rationals().from_mpz(c.lift()));
    Elem d = form_discriminant(BinaryForm(Field::rationals(), std::move(lifted)));
    return field.from_mpz(d.rational().get_num());
  }
  Elem res = form_resultant(derivative(f, 1, 0), derivative(f, 0, 1));
  return res / field.from_int(-1296);
}

CurveModel CurveModel::from_poly(std::vector<Elem> coeffs, const Field& field) {
  for (const Elem& e : coeffs) check_field(field, e);
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg != 5 && deg != 6)
    throw Error(Errc::DegenerateCurve, "degree " + std::to_string(deg) + " is not 5 or 6");
  CurveModel c(field, std::move(coeffs));
  if (form_discriminant(curve_to_form(c)).is_zero())
    throw Error(Errc::DegenerateCurve, "polynomial has a repeated root");
  return c;
}

CurveModel CurveModel::from_form(const BinaryForm& form) {
  if (form.order() != 6) throw Error(Errc::BadParameter, "curve form must have order 6");
  std::vector<Elem> f(7, form.field().zero());
  for (int i = 0; i <= 6; ++i) f[6 - i] = form[i];
  return from_poly(std::move(f), form.field());
}

BinaryForm curve_to_form(const CurveModel& curve) {
  BinaryForm out(curve.field(), 6);
  auto f = curve.poly();
  for (int d = 0; d < static_cast<int>(f.size()); ++d) out[6 - d] = f[d];
  return out;
}

}  // namespace g2
