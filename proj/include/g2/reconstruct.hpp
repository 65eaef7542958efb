#pragma once

// Curves over the base field with a prescribed moduli point.

#include <optional>
#include <string>

#include "g2/classifier.hpp"
#include "g2/conic.hpp"

namespace g2 {

struct ReconstructionResult {
  enum class Outcome { Curve, Obstructed, Unsupported };

  Outcome outcome;
  std::optional<AutGroup> group;
  std::optional<CurveModel> curve;      // Curve
  BrauerObstruction obstruction;        // Obstructed
  std::string reason;                   // Unsupported
};

std::string_view to_string(ReconstructionResult::Outcome o);

// Curve outcomes always satisfy moduli_point(curve) == p; a mismatch throws
// VerificationFailed.
ReconstructionResult reconstruct(const ModuliPoint& p);

// C2 points, characteristic 0 or p > 5. Over Q the result may be
// Obstructed with a nonempty place set.
ReconstructionResult mestre_reconstruct(const ModuliPoint& p);

// V4 points, characteristic 0 or p > 5. Throws WrongGroup otherwise.
CurveModel v4_reconstruct(const ModuliPoint& p);

// The explicit models y^2 = x^5 + x^3 + t x (D8), x^6 + x^3 + t (D12),
// t^(-1/3) x^6 + x^4 + x^2 + 1 (D12, characteristic 3), x^6 - 1, x^5 - x,
// x^5 - 1. Throws BadParameter for a missing or excluded t, Unsupported for
// 2D12 in characteristic 3 and the special points in characteristic 5,
// WrongGroup for C2 and V4.
CurveModel family_model(AutGroup group, const std::optional<Elem>& t, const Field& field);

// Sextic from a conic/cubic pair through a point of the conic.
BinaryForm pullback_sextic(const ConicCubicData& data, const Point3& point);

}  // namespace g2
