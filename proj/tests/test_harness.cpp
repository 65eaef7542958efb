#include <json.hpp>

#include "doctest.h"
#include "g2/harness.hpp"
#include "support.hpp"

using namespace g2;

TEST_CASE("sweep over F_7") {
  SweepReport r = sweep_moduli(7, 2);
  CHECK(r.total_points == 343);
  CHECK(r.failures.empty());
  CHECK(r.obstructed == 0);
  CHECK(r.unsupported == 0);
  CHECK(r.counts[AutGroup::C10] == 1);
  CHECK(r.counts[AutGroup::TwoD12] == 1);
  CHECK(r.counts[AutGroup::S4tilde] == 1);
  std::uint64_t sum = 0;
  for (const auto& [g, n] : r.counts) sum += n;
  CHECK(sum == r.total_points - r.unsupported);
  CHECK(r.reconstructed == r.enumerated_points);
  CHECK(r.enumerated_curves == 7ull * 7 * 7 * 7 * 7 * 7 - 7 * 7 * 7 * 7);

  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["command"] == "sweep");
  CHECK(j["failures"].empty());
  CHECK(j["counts"]["C10"] == 1);
  CHECK(test::error_of([] { sweep_moduli(5); }) == Errc::BadParameter);
}

TEST_CASE("sweep results do not depend on the thread count") {
  SweepReport a = sweep_moduli(7, 1), b = sweep_moduli(7, 4);
  CHECK(a.counts == b.counts);
  CHECK(a.reconstructed == b.reconstructed);
  CHECK(a.enumerated_points == b.enumerated_points);
}

TEST_CASE("fuzzing round trips") {
  FuzzReport f = fuzz_roundtrip(1000, Field::prime(11), 1);
  CHECK(f.failures.empty());
  std::uint64_t total = 0;
  for (const auto& [k, n] : f.outcomes) total += n;
  CHECK(total == 1000);
  CHECK(f.outcomes["Curve"] == 1000);

  FuzzReport q = fuzz_roundtrip(50, Field::rationals(), 1);
  CHECK(q.failures.empty());
  CHECK(q.outcomes["Curve"] == 50);

  FuzzReport empty = fuzz_roundtrip(0, Field::prime(7), 9);
  CHECK(empty.outcomes.empty());
  CHECK(empty.failures.empty());
  CHECK(nlohmann::json::parse(to_json(empty))["n"] == 0);
}

TEST_CASE("fuzz reports are deterministic") {
  CHECK(to_json(fuzz_roundtrip(100, Field::prime(13), 5)) == to_json(fuzz_roundtrip(100, Field::prime(13), 5)));
  CHECK(to_json(fuzz_roundtrip(20, Field::rationals(), 5)) == to_json(fuzz_roundtrip(20, Field::rationals(), 5)));
  CHECK(to_json(fuzz_roundtrip(100, Field::prime(13), 5)) != to_json(fuzz_roundtrip(100, Field::prime(13), 6)));
}

TEST_CASE("fuzzing in small characteristic reports unsupported points") {
  FuzzReport f = fuzz_roundtrip(200, Field::prime(5), 2);
  CHECK(f.failures.empty());
  CHECK(f.outcomes["Unsupported"] > 0);
}
