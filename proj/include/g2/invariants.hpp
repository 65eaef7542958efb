#pragma once

// Clebsch and Igusa invariants of binary sextics, the odd invariant R,
// moduli points and their lifts.

#include <optional>
#include <string>

#include "g2/binary_form.hpp"
#include "g2/conic.hpp"

namespace g2 {

struct ClebschVector {
  Elem c2, c4, c6, c10;
  friend bool operator==(const ClebschVector&, const ClebschVector&) = default;
};

struct IgusaVector {
  Elem J2, J4, J6, J10;
  std::optional<Elem> R_squared;
  std::optional<Elem> R;
  friend bool operator==(const IgusaVector&, const IgusaVector&) = default;
};

// Branch is read off the zero pattern: j1 != 0; j1 = 0, j2 != 0; otherwise.
struct ModuliPoint {
  Field field;
  Elem j1, j2, j3;

  ModuliPoint(Field f, Elem a, Elem b, Elem c);
  static ModuliPoint parse(const Field& f, const std::string& text);  // "j1,j2,j3"
  std::string to_string() const;
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};

// Covariants along the Clebsch chain. Orders 4, 4, 2, 2, 2.
struct Covariants {
  BinaryForm i, delta, y1, y2, y3;
};
// Throws SmallCharacteristic unless characteristic is 0 or > 5.
Covariants covariants(const BinaryForm& f);

ClebschVector clebsch_invariants(const BinaryForm& f);
ClebschVector clebsch_invariants(const Covariants& cov, const BinaryForm& f);

// R = -8 ((Y1,Y2)_1, Y3)_2. The transvectant-scale value ((Y1,Y2)_1, Y3)_2
// is r_transvectant.
Elem r_invariant(const BinaryForm& f);
Elem r_transvectant(const Covariants& cov);

// J_i from the integral tables; any odd characteristic. R and R_squared are
// filled in characteristic 0 and p > 5. In characteristic 3 and 5 R_squared
// is filled only when the cached expression reduces exactly.
IgusaVector igusa_invariants(const BinaryForm& f);
// J2, J4, J6, J10 only.
IgusaVector igusa_even(const BinaryForm& f);

// Throws NotACurve when J10 = 0.
ModuliPoint absolute_invariants(const IgusaVector& j);
ModuliPoint moduli_point(const CurveModel& c);

// absolute_invariants(lift_point(p)) == p. The origin lifts to (0,0,0,1).
IgusaVector lift_point(const ModuliPoint& p);
// Over Q, the lift rescaled to the integral representative of least size in
// its weighted class (primes of unfactored values are left alone); elsewhere
// lift_point.
IgusaVector minimal_lift(const ModuliPoint& p);

// (dJ2, d^2 J4, d^3 J6, d^5 J10); R_squared scales by d^15 and R is kept
// when d^15 R_squared stays a square in the field. Throws ZeroScale.
IgusaVector rescale_invariants(const IgusaVector& j, const Elem& d);

bool same_moduli(const CurveModel& a, const CurveModel& b);

// Barred conic/cubic of curves with an extra involution, on the scale where
// Abar_22 = c10 and abar_113 = -R/150. R defaults to 0.
ConicCubicData v4_conic_cubic_data(const ClebschVector& c, std::optional<Elem> r = std::nullopt);

// Two alternative entries that differ from the direct transvectant values:
// Abar_33 without its c6 c10 term and abar_233 with c4^2 c10 for c4^3 c10.
Elem abar33_without_c6c10(const ClebschVector& c);
Elem abar233_with_c4sq_c10(const ClebschVector& c);

}  // namespace g2
