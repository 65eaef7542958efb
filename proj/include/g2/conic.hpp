#pragma once

// Plane conics and cubics over Q or F_p: points, local obstructions,
// parametrization by P^1 and pullback of a cubic along it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2/binary_form.hpp"

namespace g2 {

using Point3 = std::array<Elem, 3>;

// sum a_ij Y_i Y_j with a symmetric.
struct Conic {
  Field field;
  std::array<std::array<Elem, 3>, 3> a;

  explicit Conic(Field f);
  // Symmetric matrix from its upper triangle (a11, a12, a13, a22, a23, a33).
  static Conic from_upper(Field f, const std::array<Elem, 6>& upper);
  Elem eval(const Point3& y) const;
  bool is_symmetric() const;
  std::array<Elem, 6> upper() const;
};

// sum a_ijk Y_i Y_j Y_k with a fully symmetric.
struct CubicForm {
  Field field;
  std::array<std::array<std::array<Elem, 3>, 3>, 3> a;

  explicit CubicForm(Field f);
  // Sets all permutations of (i, j, k).
  void set(int i, int j, int k, const Elem& v);
  Elem eval(const Point3& y) const;
  bool is_symmetric() const;
};

struct ConicCubicData {
  Conic conic;
  CubicForm cubic;
};

// A place of Q: a prime or the real place.
struct Place {
  mpz_class prime;  // 0 for the real place

  bool is_infinite() const { return prime == 0; }
  static Place infinity() { return {mpz_class(0)}; }
  std::string to_string() const { return is_infinite() ? "inf" : prime.get_str(); }
  friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
  // Finite primes ascending, then the real place.
  friend bool operator<(const Place& a, const Place& b);
};

struct BrauerObstruction {
  std::vector<Place> places;  // sorted

  bool trivial() const { return places.empty(); }
  friend bool operator==(const BrauerObstruction&, const BrauerObstruction&) = default;
};

Elem conic_det(const Conic& c);

// Over F_p always a point (first in the order (1,y,z), (0,1,z), (0,0,1));
// over Q a primitive integer point, or nullopt when locally insolvable
// somewhere. Throws DegenerateConic when det = 0.
std::optional<Point3> conic_point(const Conic& c);

// Classical Hilbert symbol (a, b)_v, a, b nonzero rationals.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);

// Places where the conic has no local point. Q only.
BrauerObstruction conic_obstruction(const Conic& c);

// Three binary quadratic forms T with L(T1, T2, T3) = 0 identically, the
// inverse of projection from the base point onto a line not containing it.
// Over Q the forms are integral and jointly primitive.
struct Parametrization {
  std::array<BinaryForm, 3> t;
};
Parametrization conic_parametrize(const Conic& c, const Point3& p);

// M(T1, T2, T3), order 6.
BinaryForm cubic_pullback(const CubicForm& m, const Parametrization& t);

// Congruence diagonalization: rows of `basis` are the new coordinates, so
// that L(sum_i z_i basis[i]) = sum_i diag[i] z_i^2.
struct Diagonalization {
  std::array<Elem, 3> diag;
  std::array<Point3, 3> basis;
};
Diagonalization diagonalize(const Conic& c);

}  // namespace g2
