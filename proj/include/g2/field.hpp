#pragma once

// Exact base fields: the rationals (GMP-backed) and prime fields F_p, p odd.
//
// An Elem carries the characteristic of the field it was produced in, so
// arithmetic is written with ordinary operators. Mixing elements of
// different fields throws FieldMismatch.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "g2/error.hpp"

namespace g2 {

class Elem;

class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(0); }
  // Throws CharTwo for p = 2, NotPrime for composite p (and p < 2).
  // The modulus must fit in 32 bits.
  static Field prime(std::uint64_t p);
  // "q" or "fp:P".
  static Field parse(std::string_view spec);

  Kind kind() const { return p_ == 0 ? Kind::Rationals : Kind::PrimeField; }
  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  // Throws DivisionByZero if the denominator vanishes mod p.
  Elem from_rational(const mpq_class& v) const;
  // Integers or "num/den" fractions.
  Elem parse_elem(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Elem;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Elem {
 public:
  // Rational zero.
  Elem() = default;

  Field field() const;
  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  // Valid for rational elements only.
  const mpq_class& rational() const;
  // Valid for prime-field elements only; least nonnegative residue.
  std::uint32_t residue() const;
  // Integer representative: the residue in F_p, or the value of an integral
  // rational.
  mpz_class lift() const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }

  Elem inverse() const;
  // Negative exponents invert.
  Elem pow(long e) const;
  Elem scaled(long k) const;

  friend bool operator==(const Elem& a, const Elem& b);
  // Total order used for canonical choices and containers; not a field order.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);

  // "num/den" (or "num") for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  friend class Field;
  void check_same(const Elem& o) const;

  std::uint32_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

// r with r*r = x; nonnegative root for rationals, least residue in F_p.
std::optional<Elem> sqrt_in_field(const Field& field, const Elem& x);
bool is_square(const Elem& x);

// Inverse of Frobenius in characteristic 3. Over F_3 this is the identity.
Elem cube_root_char3(const Field& field, const Elem& x);

}  // namespace g2
