#include "g2/field.hpp"

#include <charconv>

#include "g2/arith.hpp"

namespace g2 {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CharTwo: return "CharTwo";
    case Errc::NotPrime: return "NotPrime";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::SmallCharacteristic: return "SmallCharacteristic";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DegenerateCurve: return "DegenerateCurve";
    case Errc::NotACurve: return "NotACurve";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::NotAnInvariant: return "NotAnInvariant";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::MissingCache: return "MissingCache";
    case Errc::Unsupported: return "Unsupported";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::DegenerateConic: return "DegenerateConic";
    case Errc::FactorizationLimit: return "FactorizationLimit";
    case Errc::PointNotOnConic: return "PointNotOnConic";
    case Errc::DegenerateOutput: return "DegenerateOutput";
    case Errc::WrongGroup: return "WrongGroup";
    case Errc::BadParameter: return "BadParameter";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw Error(Errc::CharTwo, "characteristic 2 is not supported");
  if (p > 0xffffffffull) throw Error(Errc::BadParameter, "modulus exceeds 32 bits");
  if (!arith::is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.starts_with("fp:")) {
    std::string_view digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw Error(Errc::ParseError, "bad field spec '" + std::string(spec) + "'");
    return prime(p);
  }
  throw Error(Errc::ParseError, "bad field spec '" + std::string(spec) + "'");
}

std::string Field::name() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

Elem Field::zero() const {
  Elem e;
  e.p_ = p_;
  return e;
}

Elem Field::one() const { return from_int(1); }

Elem Field::from_int(long v) const {
  Elem e;
  e.p_ = p_;
  if (p_ == 0) {
    e.q_ = v;
  } else {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    e.r_ = static_cast<std::uint64_t>(r);
  }
  return e;
}

Elem Field::from_mpz(const mpz_class& v) const {
  Elem e;
  e.p_ = p_;
  if (p_ == 0) {
    e.q_ = v;
  } else {
    e.r_ = mpz_fdiv_ui(v.get_mpz_t(), p_);
  }
  return e;
}

Elem Field::from_rational(const mpq_class& v) const {
  if (p_ == 0) {
    if (sgn(v.get_den()) == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    Elem e;
    // Component-wise: mpq copy assumes a positive denominator.
    e.q_.get_num() = v.get_num();
    e.q_.get_den() = v.get_den();
    e.q_.canonicalize();
    return e;
  }
  Elem num = from_mpz(v.get_num());
  Elem den = from_mpz(v.get_den());
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
  return num / den;
}

Elem Field::parse_elem(std::string_view text) const {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0)
    throw Error(Errc::ParseError, "bad field element '" + s + "'");
  if (q.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(q);
}

// ----------------------------------------------------------------- Elem

Field Elem::field() const { return Field(p_); }

void Elem::check_same(const Elem& o) const {
  if (p_ != o.p_)
    throw Error(Errc::FieldMismatch,
                "characteristics " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

const mpq_class& Elem::rational() const {
  if (p_ != 0) throw Error(Errc::WrongCharacteristic, "rational() on a prime-field element");
  return q_;
}

std::uint32_t Elem::residue() const {
  if (p_ == 0) throw Error(Errc::WrongCharacteristic, "residue() on a rational element");
  return static_cast<std::uint32_t>(r_);
}

mpz_class Elem::lift() const {
  if (p_ != 0) return mpz_class(static_cast<unsigned long>(r_));
  if (q_.get_den() != 1) throw Error(Errc::BadParameter, "lift() of non-integral rational");
  return q_.get_num();
}

Elem Elem::operator-() const {
  Elem e = *this;
  if (p_ == 0) {
    e.q_ = -q_;
  } else if (r_ != 0) {
    e.r_ = p_ - r_;
  }
  return e;
}

Elem& Elem::operator+=(const Elem& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  check_same(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  }
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  check_same(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % p_;
  }
  return *this;
}

Elem& Elem::operator/=(const Elem& o) { return *this *= o.inverse(); }

Elem Elem::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Elem e = *this;
  if (p_ == 0) {
    e.q_ = 1 / q_;
  } else {
    e.r_ = arith::powmod(r_, p_ - 2, p_);
  }
  return e;
}

Elem Elem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Elem result = field().one();
  Elem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Elem Elem::scaled(long k) const { return *this * field().from_int(k); }

bool operator==(const Elem& a, const Elem& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  if (a.p_ != b.p_) return a.p_ <=> b.p_;
  if (a.p_ != 0) return a.r_ <=> b.r_;
  int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Elem::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

// ------------------------------------------------------------ functions

std::optional<Elem> sqrt_in_field(const Field& field, const Elem& x) {
  if (x.characteristic() != field.characteristic())
    throw Error(Errc::FieldMismatch, "sqrt_in_field");
  if (field.is_rationals()) {
    const mpq_class& q = x.rational();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
      return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return field.from_rational(mpq_class(n, d));
  }
  auto r = arith::sqrt_mod(x.residue(), field.characteristic());
  if (!r) return std::nullopt;
  return field.from_int(static_cast<long>(*r));
}

bool is_square(const Elem& x) { return sqrt_in_field(x.field(), x).has_value(); }

Elem cube_root_char3(const Field& field, const Elem& x) {
  if (field.characteristic() != 3)
    throw Error(Errc::WrongCharacteristic, "cube root via Frobenius needs characteristic 3");
  if (x.characteristic() != 3) throw Error(Errc::FieldMismatch, "cube_root_char3");
  return x;
}

}  // namespace g2
