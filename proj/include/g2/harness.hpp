#pragma once

// Exhaustive sweeps of M2(F_p) and random round-trip fuzzing, with JSON
// reports.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2/classifier.hpp"
#include "g2/field.hpp"

namespace g2 {

struct Failure {
  std::string subject;  // point or curve
  std::string error;
};

// Per-group counts sum to total_points - unsupported.
struct SweepReport {
  std::uint32_t p = 0;
  std::uint64_t total_points = 0;
  std::map<AutGroup, std::uint64_t> counts;
  std::uint64_t unsupported = 0;
  std::uint64_t obstructed = 0;
  std::uint64_t reconstructed = 0;     // verified Curve outcomes
  std::uint64_t enumerated_curves = 0;  // monic squarefree sextics and quintics
  std::uint64_t enumerated_points = 0;
  std::string kernel;
  double seconds = 0;
  std::vector<Failure> failures;
};

// Classifies and reconstructs every (j1, j2, j3) in F_p^3 and cross-checks
// the verified points against the moduli points of the enumerated curves.
// threads = 0 uses the hardware concurrency.
SweepReport sweep_moduli(std::uint32_t p, unsigned threads = 0);

struct FuzzReport {
  std::string field;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> outcomes;
  std::map<AutGroup, std::uint64_t> groups;
  std::vector<Failure> failures;
};

// n random curves (coefficients in [-box, box] over Q); each goes to its
// moduli point and back, and the result must have the same point and the
// group classify_curve reports. Deterministic in (n, field, seed, box).
FuzzReport fuzz_roundtrip(std::uint64_t n, const Field& field, std::uint64_t seed, long box = 3);

std::string to_json(const SweepReport& r);
std::string to_json(const FuzzReport& r);

}  // namespace g2
