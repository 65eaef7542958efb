#include "g2/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "g2/batch.hpp"
#include "g2/expressions.hpp"
#include "g2/reconstruct.hpp"

namespace g2 {

namespace {

using json = nlohmann::json;

std::string poly_string(const CurveModel& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.poly().size(); ++i) s += (i ? "," : "") + c.poly()[i].to_string();
  return s + "]";
}

enum class Status : std::uint8_t { Curve, Obstructed, Unsupported, Failed };

struct PointResult {
  Status status = Status::Failed;
  AutGroup group = AutGroup::C2;
  bool classified = false;
  std::string error;
};

PointResult sweep_one(const ModuliPoint& pt) {
  PointResult out;
  try {
    out.group = classify_point(pt);
    out.classified = true;
  } catch (const Error& e) {
    if (e.code() == Errc::Unsupported) {
      out.status = Status::Unsupported;
      return out;
    }
    out.error = e.what();
    return out;
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }
  try {
    ReconstructionResult r = reconstruct(pt);
    switch (r.outcome) {
      case ReconstructionResult::Outcome::Curve:
        if (!r.curve || moduli_point(*r.curve) != pt || r.group != out.group) {
          out.error = "curve outcome does not verify";
          return out;
        }
        out.status = Status::Curve;
        return out;
      case ReconstructionResult::Outcome::Obstructed:
        out.status = Status::Obstructed;
        out.error = "obstructed over a finite field";
        return out;
      case ReconstructionResult::Outcome::Unsupported:
        out.status = Status::Unsupported;
        return out;
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Runs body(i) for i in [0, n) on `threads` workers.
template <class Body>
void parallel_for(std::uint64_t n, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < n;) body(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

json group_counts(const std::map<AutGroup, std::uint64_t>& m) {
  json out = json::object();
  for (const auto& [g, n] : m) out[std::string(to_string(g))] = n;
  return out;
}

json failure_list(const std::vector<Failure>& f) {
  json out = json::array();
  for (const Failure& x : f) out.push_back({{"subject", x.subject}, {"error", x.error}});
  return out;
}

}  // namespace

SweepReport sweep_moduli(std::uint32_t p, unsigned threads) {
  if (p < 7) throw Error(Errc::BadParameter, "sweeps need p >= 7");
  const auto start = std::chrono::steady_clock::now();
  const Field f = Field::prime(p);
  expression_cache();
  SweepReport rep;
  rep.p = p;
  const std::uint64_t P = p, total = P * P * P;
  rep.total_points = total;

  std::vector<PointResult> results(total);
  parallel_for(total, threads, [&](std::uint64_t idx) {
    ModuliPoint pt(f, f.from_int(static_cast<long>(idx / (P * P))), f.from_int(static_cast<long>(idx / P % P)),
                   f.from_int(static_cast<long>(idx % P)));
    results[idx] = sweep_one(pt);
  });

  const batch::Isa isa = batch::best_isa();
  rep.kernel = std::string(batch::to_string(isa));
  batch::Enumeration en = batch::enumerate_moduli_points(p, isa);
  rep.enumerated_curves = en.curves;
  rep.enumerated_points = en.points();

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const PointResult& r = results[idx];
    const std::string name = std::to_string(idx / (P * P)) + "," + std::to_string(idx / P % P) + "," +
                             std::to_string(idx % P);
    if (r.status == Status::Unsupported) {
      ++rep.unsupported;
    } else if (r.classified) {
      ++rep.counts[r.group];
    }
    if (r.status == Status::Curve) ++rep.reconstructed;
    if (r.status == Status::Obstructed) ++rep.obstructed;
    if (r.status == Status::Failed || r.status == Status::Obstructed) rep.failures.push_back({name, r.error});
    const bool hit = en.hit[idx];
    if (hit && r.status != Status::Curve && r.status != Status::Failed && r.status != Status::Obstructed)
      rep.failures.push_back({name, "enumerated point was not reconstructed"});
    if (!hit && r.status == Status::Curve)
      rep.failures.push_back({name, "reconstructed point is missing from the enumeration"});
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FuzzReport fuzz_roundtrip(std::uint64_t n, const Field& field, std::uint64_t seed, long box) {
  FuzzReport rep;
  rep.field = field.name();
  rep.n = n;
  rep.seed = seed;
  if (n == 0) return rep;
  expression_cache();
  Rng rng(seed);
  const long p = field.characteristic();
  auto draw = [&]() -> Elem {
    return field.is_rationals() ? field.from_int(rng.uniform(-box, box)) : field.from_int(rng.uniform(0, p - 1));
  };
  for (std::uint64_t i = 0; i < n; ++i) {
    std::optional<CurveModel> c;
    while (!c) {
      std::vector<Elem> coeffs;
      for (int k = 0; k <= 6; ++k) coeffs.push_back(draw());
      try {
        c = CurveModel::from_poly(std::move(coeffs), field);
      } catch (const Error& e) {
        if (e.code() != Errc::DegenerateCurve) throw;
      }
    }
    const std::string name = poly_string(*c);
    try {
      ModuliPoint pt = moduli_point(*c);
      ReconstructionResult r = reconstruct(pt);
      ++rep.outcomes[std::string(to_string(r.outcome))];
      if (r.group) ++rep.groups[*r.group];
      switch (r.outcome) {
        case ReconstructionResult::Outcome::Curve:
          if (!r.curve || moduli_point(*r.curve) != pt)
            rep.failures.push_back({name, "reconstructed curve has a different moduli point"});
          else if (r.group != classify_curve(*c))
            rep.failures.push_back({name, "classify_curve disagrees with the point's group"});
          break;
        case ReconstructionResult::Outcome::Obstructed:
          // The input curve is a model over the field, so L has a point.
          rep.failures.push_back({name, "obstructed although a model exists"});
          break;
        case ReconstructionResult::Outcome::Unsupported: break;
      }
    } catch (const std::exception& e) {
      ++rep.outcomes["Error"];
      rep.failures.push_back({name, e.what()});
    }
  }
  return rep;
}

std::string to_json(const SweepReport& r) {
  json j{{"command", "sweep"},
         {"p", r.p},
         {"total_points", r.total_points},
         {"counts", group_counts(r.counts)},
         {"unsupported", r.unsupported},
         {"obstructed", r.obstructed},
         {"reconstructed", r.reconstructed},
         {"enumerated_curves", r.enumerated_curves},
         {"enumerated_points", r.enumerated_points},
         {"enumeration", "monic squarefree sextics and quintics"},
         {"kernel", r.kernel},
         {"seconds", r.seconds},
         {"failures", failure_list(r.failures)}};
  return j.dump();
}

std::string to_json(const FuzzReport& r) {
  json outcomes = json::object();
  for (const auto& [k, v] : r.outcomes) outcomes[k] = v;
  json j{{"command", "fuzz"},    {"field", r.field},          {"n", r.n},
         {"seed", r.seed},       {"outcomes", outcomes},      {"groups", group_counts(r.groups)},
         {"failures", failure_list(r.failures)}};
  return j.dump();
}

}  // namespace g2
