#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "orbidt/io.hpp"
#include "orbidt/pleth.hpp"
#include "orbidt/points.hpp"
#include "orbidt/selfcheck.hpp"
#include "orbidt/transfer.hpp"

namespace {

using namespace orbidt;

struct Options {
  int r = 1;
  int max_boxes = 6;
  int points = 1;
  std::vector<std::string> point;
  std::uint64_t seed = 0;
  std::string formula = "Fr";
  std::string format = "json";
  std::string cache_dir;
  int jobs = 1;
};

std::string resolved_cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  const char* env = std::getenv("ORBIDT_CACHE_DIR");
  return env ? env : "";
}

RationalPoint parse_point(const std::vector<std::string>& strs) {
  return RationalPoint{parse_rational(strs[0]), parse_rational(strs[1]),
                       parse_rational(strs[2])};
}

// Explicit point if given, otherwise a seeded generic draw for fn.
template <class Fn>
auto at_point(const Options& o, Fn&& fn) {
  if (!o.point.empty()) return fn(parse_point(o.point));
  std::mt19937_64 rng(o.seed);
  return with_generic_point(rng, fn);
}

void emit_series(const Options& o, const Json& j) {
  if (o.format == "csv") {
    std::cout << series_csv(j);
  } else if (o.format == "text") {
    for (const Json& c : j.at("coefficients")) {
      std::string key;
      for (const Json& a : c.at("alpha")) {
        if (!key.empty()) key += ',';
        key += a.dump();
      }
      const Json& v = c.at("value");
      std::cout << "q^(" << key << ") "
                << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else {
    std::cout << dump(j);
  }
}

void require_json_or_text(const Options& o) {
  if (o.format == "csv")
    fail(errc::usage, "csv output is only available for series commands");
}

int cmd_enumerate(const Options& o) {
  require_json_or_text(o);
  const auto parts = load_or_enumerate(o.r, o.max_boxes, resolved_cache_dir(o));
  Json j;
  j["r"] = o.r;
  j["N"] = o.max_boxes;
  Json recs = Json::array();
  for (const auto& cp : parts) {
    if (cp.boxes.empty()) continue;
    recs.push_back(partition_json(cp));
  }
  j["count"] = recs.size();
  j["records"] = std::move(recs);
  if (o.format == "text") {
    for (const Json& rec : j["records"]) std::cout << rec.dump() << "\n";
  } else {
    std::cout << dump(j);
  }
  return 0;
}

int cmd_vertex(const Options& o) {
  require_json_or_text(o);
  const auto parts = load_or_enumerate(o.r, o.max_boxes, resolved_cache_dir(o));
  const auto [pt, reports] = at_point(o, [&](const RationalPoint& p) {
    Json recs = Json::array();
    for (const auto& cp : parts) {
      if (cp.boxes.empty()) continue;
      const WeightList W = partition_weights(cp.boxes, o.r);
      recs.push_back(vertex_report_json(cp, W, ahat_eval(W, p)));
    }
    return std::pair{p, std::move(recs)};
  });
  Json j;
  j["r"] = o.r;
  j["N"] = o.max_boxes;
  j["point"] = Json::array(
      {rational_str(pt.s1), rational_str(pt.s2), rational_str(pt.s3)});
  j["reports"] = reports;
  if (o.format == "text") {
    for (const Json& rec : j["reports"]) std::cout << rec.dump() << "\n";
  } else {
    std::cout << dump(j);
  }
  return 0;
}

int cmd_zseries(const Options& o) {
  const auto parts = load_or_enumerate(o.r, o.max_boxes, resolved_cache_dir(o));
  const auto [pt, z] = at_point(o, [&](const RationalPoint& p) {
    return std::pair{p,
                     z_enumerated_point(parts, o.r, o.max_boxes, p, o.jobs)};
  });
  Json j = series_json(z, "point");
  j["point"] = Json::array(
      {rational_str(pt.s1), rational_str(pt.s2), rational_str(pt.s3)});
  emit_series(o, j);
  return 0;
}

SymbolicSum formula_sum(const std::string& name, int r) {
  if (name == "F") return build_F(r, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  if (name == "Fr") return build_F_r(r);
  if (name == "Fcol") return build_F_col(r);
  if (name == "Fnum") return build_F_num(r);
  if (name == "Flim") return build_F_limit(r);
  fail(errc::usage, "unknown formula: " + name);
}

int cmd_closedform(const Options& o) {
  const int N = o.max_boxes;
  const SymbolicSum S = formula_sum(o.formula, o.r);
  if (o.formula == "Flim") {
    emit_series(o, series_json(pexp_cring(S, N), "c-ring"));
  } else if (o.formula == "Fnum") {
    emit_series(o,
                series_json(flip_q0(pexp_eval(S, PointCtx{}, N)), "numerical"));
  } else {
    const auto [pt, z] = at_point(o, [&](const RationalPoint& p) {
      return std::pair{p, pexp_point(S, p, N)};
    });
    Json j = series_json(z, "point");
    j["formula"] = o.formula;
    j["point"] = Json::array(
        {rational_str(pt.s1), rational_str(pt.s2), rational_str(pt.s3)});
    emit_series(o, j);
    return 0;
  }
  return 0;
}

int cmd_limit(const Options& o) {
  const auto parts = load_or_enumerate(o.r, o.max_boxes, resolved_cache_dir(o));
  emit_series(
      o, series_json(z_enumerated_limit(parts, o.r, o.max_boxes, o.jobs),
                     "limit"));
  return 0;
}

int cmd_transfer(const Options& o) {
  Json j = series_json(z_limit(o.r, o.max_boxes), "transfer");
  const GammaArg a{QKey{1, 0}, 0}, b{QKey{0, 1}, 0};
  Json checks;
  checks["gamma_commutation"] = check_gamma_commutation(a, b, 4);
  checks["A_commutation"] = check_A_commutation(o.r, 4);
  if (o.format == "json") {
    j["checks"] = checks;
    std::cout << dump(j);
  } else {
    emit_series(o, j);
    if (o.format == "text") std::cout << "checks " << checks.dump() << "\n";
  }
  return 0;
}

int cmd_compare(const Options& o) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const int r = o.r, N = o.max_boxes;
  Json report;
  report["params"] = Json{{"r", r},
                          {"N", N},
                          {"formula", o.formula},
                          {"points", o.points},
                          {"seed", o.seed}};
  bool overall = true;
  Json runs = Json::array();

  auto verdicts = [&](const Json& lhs, const Json& rhs) {
    // Both series JSONs carry map-ordered coefficient lists; walk the union.
    std::map<std::vector<int>, std::pair<Json, Json>> merged;
    for (const Json& c : lhs.at("coefficients"))
      merged[c.at("alpha").get<std::vector<int>>()].first = c.at("value");
    for (const Json& c : rhs.at("coefficients"))
      merged[c.at("alpha").get<std::vector<int>>()].second = c.at("value");
    Json vs = Json::array();
    bool all = true;
    for (const auto& [alpha, pr] : merged) {
      const bool eq = pr.first == pr.second;
      all = all && eq;
      vs.push_back(Json{{"alpha", alpha},
                        {"lhs", pr.first},
                        {"rhs", pr.second},
                        {"equal", eq}});
    }
    return std::pair{vs, all};
  };

  if (o.formula == "Flim") {
    const auto parts = load_or_enumerate(r, N, resolved_cache_dir(o));
    const auto [vs, eq] =
        verdicts(series_json(z_limit(r, N), "transfer"),
                 series_json(pexp_cring(build_F_limit(r), N), "c-ring"));
    overall = eq;
    runs.push_back(Json{{"pair", "transfer/pexp"}, {"verdicts", vs}, {"equal", eq}});
    const auto [vs2, eq2] =
        verdicts(series_json(z_index_limit(parts, r, N), "limit"),
                 series_json(pexp_cring(build_F_limit(r), N), "c-ring"));
    overall = overall && eq2;
    runs.push_back(
        Json{{"pair", "enumeration/pexp"}, {"verdicts", vs2}, {"equal", eq2}});
  } else if (o.formula == "Fnum") {
    const auto parts = load_or_enumerate(r, N, resolved_cache_dir(o));
    const auto [vs, eq] = verdicts(
        series_json(z_signed_count(parts, r, N), "numerical"),
        series_json(flip_q0(pexp_eval(build_F_num(r), PointCtx{}, N)),
                    "numerical"));
    overall = eq;
    runs.push_back(
        Json{{"pair", "enumeration/pexp"}, {"verdicts", vs}, {"equal", eq}});
  } else {
    const auto parts = load_or_enumerate(r, N, resolved_cache_dir(o));
    const SymbolicSum S = concat(build_F_r(r), build_F_col(r));
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < o.points; ++k) {
      const auto [pt, pr] = with_generic_point(rng, [&](const RationalPoint& p) {
        return std::pair{
            p, std::pair{z_enumerated_point(parts, r, N, p, o.jobs),
                         pexp_point(S, p, N)}};
      });
      const auto [vs, eq] = verdicts(series_json(pr.first, "point"),
                                     series_json(pr.second, "point"));
      overall = overall && eq;
      runs.push_back(Json{{"point", Json::array({rational_str(pt.s1),
                                                 rational_str(pt.s2),
                                                 rational_str(pt.s3)})},
                          {"pair", "enumeration/pexp"},
                          {"verdicts", vs},
                          {"equal", eq}});
    }
  }
  report["runs"] = std::move(runs);
  report["overall"] = overall;
  report["seconds"] =
      std::chrono::duration<double>(Clock::now() - t0).count();
  if (o.format == "csv") fail(errc::usage, "compare emits json or text");
  if (o.format == "text") {
    std::cout << (overall ? "EQUAL" : "MISMATCH") << "\n";
  } else {
    std::cout << dump(report);
  }
  return overall ? 0 : 1;
}

int cmd_selfcheck(const Options& o) {
  require_json_or_text(o);
  const auto results = run_acceptance(o.seed, o.jobs);
  bool overall = true;
  for (const auto& res : results) overall = overall && res.pass;
  if (o.format == "text") {
    for (const auto& res : results) {
      std::cout << res.id << (res.pass ? " PASS " : " FAIL ") << "("
                << res.seconds << "s) " << res.detail << "\n";
    }
    std::cout << (overall ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  } else {
    Json j;
    Json rs = Json::array();
    for (const auto& res : results) {
      rs.push_back(Json{{"id", res.id},
                        {"pass", res.pass},
                        {"seconds", res.seconds},
                        {"detail", res.detail}});
    }
    j["results"] = std::move(rs);
    j["overall"] = overall;
    std::cout << dump(j);
  }
  return overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant degree-0 DT series of [C^3/mu_r]: enumeration, "
               "closed forms, limits, and certification"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool with_point) {
    cmd->add_option("--r", o.r, "cyclic group order")->check(CLI::PositiveNumber);
    cmd->add_option("--max-boxes", o.max_boxes, "series truncation order")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cache-dir", o.cache_dir,
                    "partition cache directory (else ORBIDT_CACHE_DIR)");
    cmd->add_option("--jobs", o.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "seed for point draws");
    if (with_point) {
      cmd->add_option("--point", o.point,
                      "explicit point: three rationals p/q")
          ->expected(3);
      cmd->add_option("--points", o.points, "number of seeded points")
          ->check(CLI::PositiveNumber);
    }
  };

  auto* c_enum = app.add_subcommand("enumerate", "colored plane partitions");
  add_common(c_enum, false);
  auto* c_vertex = app.add_subcommand("vertex", "per-partition weight reports");
  add_common(c_vertex, true);
  auto* c_zser = app.add_subcommand("zseries", "brute-force series at a point");
  add_common(c_zser, true);
  auto* c_closed =
      app.add_subcommand("closedform", "plethystic-exponential series");
  add_common(c_closed, true);
  c_closed->add_option("--formula", o.formula, "F|Fr|Fcol|Fnum|Flim")
      ->check(CLI::IsMember({"F", "Fr", "Fcol", "Fnum", "Flim"}));
  auto* c_limit = app.add_subcommand("limit", "rigid-limit series (enumeration)");
  add_common(c_limit, false);
  auto* c_transfer =
      app.add_subcommand("transfer", "vertex-operator limit series and checks");
  add_common(c_transfer, false);
  auto* c_compare =
      app.add_subcommand("compare", "certify closed form against enumeration");
  add_common(c_compare, true);
  c_compare->add_option("--formula", o.formula,
                        "Fr (main theorem) | Flim | Fnum");
  auto* c_self = app.add_subcommand("selfcheck", "run the acceptance suite");
  add_common(c_self, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_enum)) return cmd_enumerate(o);
    if (app.got_subcommand(c_vertex)) return cmd_vertex(o);
    if (app.got_subcommand(c_zser)) return cmd_zseries(o);
    if (app.got_subcommand(c_closed)) return cmd_closedform(o);
    if (app.got_subcommand(c_limit)) return cmd_limit(o);
    if (app.got_subcommand(c_transfer)) return cmd_transfer(o);
    if (app.got_subcommand(c_compare)) return cmd_compare(o);
    if (app.got_subcommand(c_self)) return cmd_selfcheck(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
