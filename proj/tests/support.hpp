#pragma once

#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "g2/binary_form.hpp"

namespace g2::test {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Elem random_elem(std::mt19937_64& rng, const Field& f, long box = 20) {
  if (f.is_rationals()) return f.from_int(uniform(rng, -box, box));
  return f.from_int(uniform(rng, 0, f.characteristic() - 1));
}

inline Elem random_nonzero(std::mt19937_64& rng, const Field& f, long box = 20) {
  for (;;) {
    Elem e = random_elem(rng, f, box);
    if (!e.is_zero()) return e;
  }
}

inline BinaryForm random_form(std::mt19937_64& rng, const Field& f, int order, long box = 20) {
  std::vector<Elem> c;
  for (int i = 0; i <= order; ++i) c.push_back(random_elem(rng, f, box));
  return BinaryForm(f, std::move(c));
}

// Squarefree sextic form.
inline BinaryForm random_curve_form(std::mt19937_64& rng, const Field& f, long box = 20) {
  for (;;) {
    BinaryForm form = random_form(rng, f, 6, box);
    if (!form_discriminant(form).is_zero()) return form;
  }
}

inline GL2Matrix random_gl2(std::mt19937_64& rng, const Field& f, long box = 5) {
  for (;;) {
    GL2Matrix m{random_elem(rng, f, box), random_elem(rng, f, box), random_elem(rng, f, box),
                random_elem(rng, f, box)};
    if (!m.det().is_zero()) return m;
  }
}

inline CurveModel curve_of(const Field& f, std::initializer_list<long> ascending) {
  std::vector<Elem> c;
  for (long v : ascending) c.push_back(f.from_int(v));
  return CurveModel::from_poly(std::move(c), f);
}

inline CurveModel random_curve(std::mt19937_64& rng, const Field& f, long box = 20) {
  return CurveModel::from_form(random_curve_form(rng, f, box));
}

// Error code thrown by fn, or nullopt when it returns.
template <class Fn>
std::optional<Errc> error_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace g2::test
