#pragma once

// Automorphism groups of genus-2 curves from their moduli points.

#include <optional>
#include <string_view>

#include "g2/invariants.hpp"

namespace g2 {

enum class AutGroup { C2, V4, D8, D12, TwoD12, S4tilde, C10 };

std::string_view to_string(AutGroup g);
// Throws ParseError.
AutGroup parse_aut_group(std::string_view s);

enum class Family { D8, D12 };

struct Classification {
  AutGroup group;
  std::optional<Elem> t;  // D8 and D12 only
};

// Throws Unsupported for the merged special point in characteristic 5 and
// when the R^2 test cannot be evaluated mod p.
Classification classify_point_detail(const ModuliPoint& p);
AutGroup classify_point(const ModuliPoint& p);

// Same answer as classify_point(moduli_point(c)); uses R directly when the
// characteristic allows it.
Classification classify_curve_detail(const CurveModel& c);
AutGroup classify_curve(const CurveModel& c);

// Absolute invariant of the D8 or D12 family. Throws DegenerateDenominator.
Elem t_invariant(const ModuliPoint& p, Family family);

}  // namespace g2
