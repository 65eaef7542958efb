#pragma once

#include <span>
#include <vector>

#include "g2/field.hpp"

namespace g2 {

// Homogeneous binary form sum_i c_i x1^(n-i) x2^i of order n.
class BinaryForm {
 public:
  // Zero form of the given order.
  BinaryForm(Field field, int order);
  BinaryForm(Field field, std::vector<Elem> coeffs);

  const Field& field() const { return field_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Elem& operator[](int i) const { return coeffs_[i]; }
  Elem& operator[](int i) { return coeffs_[i]; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Value at (x1, x2).
  Elem eval(const Elem& x1, const Elem& x2) const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Elem& s, BinaryForm a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

  // Integer-valued literals, index = power of x2.
  static BinaryForm from_ints(Field field, std::initializer_list<long> coeffs);

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

// Classical transvectant
//   (F,G)_k = (m-k)!(n-k)!/(m!n!) sum_j (-1)^j C(k,j) d^kF/dx1^(k-j)dx2^j * d^kG/dx1^j dx2^(k-j)
// Zero form when k exceeds either order. Throws SmallCharacteristic when a
// needed factorial denominator vanishes in the field.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k);

// Substitution (x1, x2) -> (m x1 + n x2, p x1 + q x2).
struct GL2Matrix {
  Elem m, n, p, q;

  Elem det() const { return m * q - n * p; }
  static GL2Matrix identity(const Field& field);
};

// Matrix product a*b. Transforming by a and then by b equals transforming by
// a*b.
GL2Matrix compose(const GL2Matrix& a, const GL2Matrix& b);

// F(m x1 + n x2, p x1 + q x2). Throws SingularMatrix when det = 0.
BinaryForm gl2_transform(const BinaryForm& f, const GL2Matrix& mat);

// Resultant of two binary forms (Sylvester determinant on full formal
// degrees).
Elem form_resultant(const BinaryForm& f, const BinaryForm& g);

// Discriminant of an order-6 form, normalized as a0^10 prod_{i<j} (r_i - r_j)^2
// (equal to Igusa's I10). Zero iff the form has a repeated factor.
Elem form_discriminant(const BinaryForm& f);

// Hyperelliptic model y^2 = f(x), deg f in {5, 6}, f squarefree.
class CurveModel {
 public:
  // Ascending coefficients f_0 + f_1 x + ... ; trailing zeros are trimmed.
  // Throws DegenerateCurve on bad degree or repeated roots.
  static CurveModel from_poly(std::vector<Elem> coeffs, const Field& field);
  // Through an order-6 form F, f(x) = F(x, 1).
  static CurveModel from_form(const BinaryForm& form);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(f_.size()) - 1; }
  std::span<const Elem> poly() const { return f_; }
  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  CurveModel(Field field, std::vector<Elem> f) : field_(field), f_(std::move(f)) {}
  Field field_;
  std::vector<Elem> f_;
};

// F(x1, x2) = x2^6 f(x1/x2).
BinaryForm curve_to_form(const CurveModel& curve);

inline CurveModel curve_from_poly(std::vector<Elem> coeffs, const Field& field) {
  return CurveModel::from_poly(std::move(coeffs), field);
}

}  // namespace g2
