// Command-line front end. Every command prints one JSON object per line and
// exits 0 iff nothing failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2/expressions.hpp"
#include "g2/harness.hpp"
#include "g2/reconstruct.hpp"

namespace {

using json = nlohmann::json;
using namespace g2;

json elems(std::span<const Elem> v) {
  json out = json::array();
  for (const Elem& e : v) out.push_back(e.to_string());
  return out;
}

json point_json(const ModuliPoint& p) { return json::array({p.j1.to_string(), p.j2.to_string(), p.j3.to_string()}); }

json places_json(const BrauerObstruction& b) {
  json out = json::array();
  for (const Place& v : b.places) out.push_back(v.to_string());
  return out;
}

CurveModel parse_curve(const Field& f, const std::string& text) {
  std::vector<Elem> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    c.push_back(f.parse_elem(text.substr(start, end - start)));
    start = end + 1;
  }
  return CurveModel::from_poly(std::move(c), f);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json error_json(const std::string& subject, const std::exception& e) {
  json j{{"subject", subject}, {"error", e.what()}};
  if (auto* ge = dynamic_cast<const Error*>(&e)) j["code"] = std::string(to_string(ge->code()));
  return j;
}

json invariants_json(const CurveModel& c) {
  IgusaVector j = igusa_invariants(curve_to_form(c));
  json out{{"command", "invariants"},
           {"field", c.field().name()},
           {"curve", elems(c.poly())},
           {"J", json::array({j.J2.to_string(), j.J4.to_string(), j.J6.to_string(), j.J10.to_string()})},
           {"point", point_json(absolute_invariants(j))}};
  if (j.R_squared) out["R_squared"] = j.R_squared->to_string();
  if (j.R) out["R"] = j.R->to_string();
  const std::uint32_t p = c.field().characteristic();
  if (p == 0 || p > 5) {
    ClebschVector cv = clebsch_invariants(curve_to_form(c));
    out["clebsch"] = json::array({cv.c2.to_string(), cv.c4.to_string(), cv.c6.to_string(), cv.c10.to_string()});
  }
  return out;
}

json classification_json(const Classification& cls) {
  json out{{"group", std::string(to_string(cls.group))}};
  if (cls.t) out["t"] = cls.t->to_string();
  return out;
}

json reconstruct_json(const ModuliPoint& p) {
  ReconstructionResult r = reconstruct(p);
  json out{{"command", "reconstruct"},
           {"field", p.field.name()},
           {"point", point_json(p)},
           {"outcome", std::string(to_string(r.outcome))}};
  if (r.group) out["group"] = std::string(to_string(*r.group));
  if (r.curve) {
    out["model"] = elems(r.curve->poly());
    out["verified"] = moduli_point(*r.curve) == p;
  }
  if (r.outcome == ReconstructionResult::Outcome::Obstructed) out["obstruction"] = places_json(r.obstruction);
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

json obstruction_json(const Conic& c, const std::string& subject) {
  BrauerObstruction b = conic_obstruction(c);
  json out{{"command", "obstruction"}, {"subject", subject}, {"places", places_json(b)}};
  json upper = json::array();
  for (const Elem& e : c.upper()) upper.push_back(e.to_string());
  out["conic"] = upper;
  auto pt = conic_point(c);
  if (pt) out["point"] = json::array({(*pt)[0].to_string(), (*pt)[1].to_string(), (*pt)[2].to_string()});
  out["consistent"] = b.trivial() == pt.has_value() && b.places.size() % 2 == 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 curves from their moduli points"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_spec = "q";
  std::uint64_t seed = 1;
  std::string cache_path;
  bool json_flag = false;
  app.add_option("--field", field_spec, "q or fp:P")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--cache", cache_path, "expression cache file");
  app.add_flag("--json", json_flag, "JSON lines (the only output format)");

  std::vector<std::string> curves, points, conics;
  auto* inv = app.add_subcommand("invariants", "Igusa and Clebsch invariants of curves");
  inv->add_option("curves", curves, "ascending coefficients c0,c1,...,c6 of f")->required();

  auto* cls = app.add_subcommand("classify", "automorphism group of curves or points");
  cls->add_option("points", points, "moduli points j1,j2,j3");
  cls->add_option("--curve", curves, "ascending coefficients of f");

  auto* rec = app.add_subcommand("reconstruct", "curve over the field with the given moduli point");
  rec->add_option("points", points, "moduli points j1,j2,j3")->required();

  auto* obs = app.add_subcommand("obstruction", "places where Mestre's conic has no local point (over Q)");
  obs->add_option("points", points, "moduli points j1,j2,j3");
  obs->add_option("--conic", conics, "upper triangle a11,a12,a13,a22,a23,a33");

  std::uint32_t sweep_p = 0;
  unsigned threads = 0;
  auto* swp = app.add_subcommand("sweep", "all of M2(F_p) against curve enumeration");
  swp->add_option("--p", sweep_p, "prime (default: the --field prime)");
  swp->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::uint64_t fuzz_n = 100;
  long box = 3;
  auto* fz = app.add_subcommand("fuzz", "random curve round trips");
  fz->add_option("--n", fuzz_n, "number of curves")->capture_default_str();
  fz->add_option("--box", box, "coefficient bound over Q")->capture_default_str();

  auto* boot = app.add_subcommand("bootstrap-cache", "derive every cached expression and write the cache");

  CLI11_PARSE(app, argc, argv);
  (void)json_flag;

  std::size_t failures = 0;
  try {
    const Field field = Field::parse(field_spec);
    if (*boot) {
      ExpressionCache c = cache_bootstrap(seed);
      const std::string path = cache_path.empty() ? "expr_cache.json" : cache_path;
      std::ofstream(path) << c.to_json();
      emit({{"command", "bootstrap-cache"}, {"path", path}, {"seed", seed}, {"entries", c.entries().size()}});
      return 0;
    }
    if (!cache_path.empty()) set_cache_path(cache_path);

    auto each = [&](const std::vector<std::string>& items, auto fn) {
      for (const std::string& s : items) {
        try {
          emit(fn(s));
        } catch (const std::exception& e) {
          ++failures;
          emit(error_json(s, e));
        }
      }
    };

    if (*inv) {
      each(curves, [&](const std::string& s) { return invariants_json(parse_curve(field, s)); });
    } else if (*cls) {
      each(curves, [&](const std::string& s) {
        json j = classification_json(classify_curve_detail(parse_curve(field, s)));
        j["command"] = "classify";
        j["curve"] = s;
        return j;
      });
      each(points, [&](const std::string& s) {
        json j = classification_json(classify_point_detail(ModuliPoint::parse(field, s)));
        j["command"] = "classify";
        j["point"] = s;
        return j;
      });
    } else if (*rec) {
      each(points, [&](const std::string& s) {
        json j = reconstruct_json(ModuliPoint::parse(field, s));
        if (j.contains("verified") && !j["verified"].get<bool>()) ++failures;
        return j;
      });
    } else if (*obs) {
      each(points, [&](const std::string& s) {
        ConicCubicData d = mestre_data_from_invariants(minimal_lift(ModuliPoint::parse(field, s)));
        return obstruction_json(d.conic, s);
      });
      each(conics, [&](const std::string& s) {
        std::vector<Elem> v;
        std::size_t start = 0;
        while (start <= s.size()) {
          std::size_t end = s.find(',', start);
          if (end == std::string::npos) end = s.size();
          v.push_back(field.parse_elem(s.substr(start, end - start)));
          start = end + 1;
        }
        if (v.size() != 6) throw Error(Errc::ParseError, "a conic needs 6 entries");
        return obstruction_json(Conic::from_upper(field, {v[0], v[1], v[2], v[3], v[4], v[5]}), s);
      });
    } else if (*swp) {
      std::uint32_t p = sweep_p ? sweep_p : field.characteristic();
      SweepReport r = sweep_moduli(p, threads);
      failures += r.failures.size();
      std::cout << to_json(r) << '\n';
    } else if (*fz) {
      FuzzReport r = fuzz_roundtrip(fuzz_n, field, seed, box);
      failures += r.failures.size();
      std::cout << to_json(r) << '\n';
    }
  } catch (const std::exception& e) {
    emit(error_json("", e));
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
