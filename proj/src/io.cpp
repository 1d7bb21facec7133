#include "orbidt/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace orbidt {

namespace {

std::string int_str(const Int& z) { return z.get_str(); }

Json box_list(const PlanePartition& pp) {
  Json a = Json::array();
  for (const Box& b : pp) a.push_back(Json::array({b.i1, b.i2, b.i3}));
  return a;
}

// Common denominator turning a set of rational coefficients integral.
Int common_den(std::initializer_list<const CPoly*> ps) {
  Int l = 1;
  for (const CPoly* p : ps)
    for (const auto& [k, a] : p->terms()) {
      (void)k;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den().get_mpz_t());
    }
  return l;
}

Json cpoly_scaled(const CPoly& p, const Int& scale) {
  Json a = Json::array();
  for (const auto& [k, coef] : p.terms()) {
    const Rational v = coef * Rational(scale);
    a.push_back(Json::array({k, int_str(v.get_num())}));
  }
  return a;
}

}  // namespace

Json partition_json(const ColoredPartition& cp) {
  Json j;
  j["boxes"] = box_list(cp.boxes);
  j["alpha"] = cp.alpha;
  j["index"] = cp.index;
  return j;
}

Json vertex_report_json(const ColoredPartition& cp, const WeightList& W,
                        const Rational& ahat) {
  Json j;
  j["boxes"] = box_list(cp.boxes);
  j["alpha"] = cp.alpha;
  Json w = Json::array();
  for (const ExponentVec& e : W) {
    if (e[0] % 2 != 0 || e[1] % 2 != 0 || e[2] % 2 != 0)
      fail(errc::domain_error, "tangent weight with half-integer exponent");
    w.push_back(Json::array({e[0] / 2, e[1] / 2, e[2] / 2}));
  }
  j["W"] = w;
  j["index"] = cp.index;
  j["ahat_at_point"] = rational_str(ahat);
  return j;
}

Json laurent_json(const LaurentPoly& p) {
  Json j;
  j["doubled"] = true;
  Json terms = Json::array();
  for (const auto& [e, coef] : p.terms())
    terms.push_back(
        Json::array({e, int_str(coef.get_num()), int_str(coef.get_den())}));
  j["terms"] = terms;
  return j;
}

Json cpoly_json(const CPoly& p) { return cpoly_scaled(p, common_den({&p})); }

Json crational_json(const CRational& v) {
  const Int l = common_den({&v.num(), &v.den()});
  Json j;
  j["num"] = cpoly_scaled(v.num(), l);
  j["den"] = cpoly_scaled(v.den(), l);
  return j;
}

namespace {

template <class C, class ValueFn>
Json series_json_impl(const QSeries<C>& f, const std::string& mode,
                      ValueFn&& value) {
  Json j;
  j["r"] = f.width();
  j["N"] = f.order();
  j["mode"] = mode;
  Json cs = Json::array();
  for (const auto& [k, v] : f.coeffs()) {
    Json c;
    c["alpha"] = k;
    c["value"] = value(v);
    cs.push_back(std::move(c));
  }
  j["coefficients"] = cs;
  return j;
}

}  // namespace

Json series_json(const QSeries<Rational>& f, const std::string& mode) {
  return series_json_impl(f, mode,
                          [](const Rational& v) { return rational_str(v); });
}
Json series_json(const QSeries<CRational>& f, const std::string& mode) {
  return series_json_impl(f, mode,
                          [](const CRational& v) { return crational_json(v); });
}
Json series_json(const QSeries<CPoly>& f, const std::string& mode) {
  return series_json_impl(
      f, mode, [](const CPoly& v) { return crational_json(CRational(v)); });
}
Json series_json(const QSeries<LaurentPoly>& f, const std::string& mode) {
  return series_json_impl(f, mode,
                          [](const LaurentPoly& v) { return laurent_json(v); });
}

std::string series_csv(const Json& series) {
  std::ostringstream out;
  out << "alpha,value\n";
  for (const Json& c : series.at("coefficients")) {
    std::string key;
    for (const Json& a : c.at("alpha")) {
      if (!key.empty()) key += '-';
      key += a.dump();
    }
    const Json& v = c.at("value");
    std::string vs = v.is_string() ? v.get<std::string>() : v.dump();
    if (vs.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : vs) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      vs = std::move(quoted);
    }
    out << key << ',' << vs << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_path(int r, int N, const std::string& dir) {
  std::ostringstream key;
  key << "partitions;r=" << r << ";N=" << N << ";fmt=1";
  std::ostringstream name;
  name << "orbidt-" << std::hex << fnv1a(key.str()) << ".jsonl";
  return std::filesystem::path(dir) / name.str();
}

bool load_cache(const std::filesystem::path& path, int r,
                std::vector<ColoredPartition>& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::vector<ColoredPartition> parts;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json j = Json::parse(line);
      ColoredPartition cp;
      for (const Json& b : j.at("boxes"))
        cp.boxes.push_back(Box{b.at(0).get<int>(), b.at(1).get<int>(),
                               b.at(2).get<int>()});
      cp.alpha = j.at("alpha").get<std::vector<int>>();
      cp.index = j.at("index").get<int>();
      if ((int)cp.alpha.size() != r) return false;
      parts.push_back(std::move(cp));
    }
  } catch (const std::exception&) {
    return false;
  }
  if (parts.empty()) return false;
  out = std::move(parts);
  return true;
}

}  // namespace

std::vector<ColoredPartition> load_or_enumerate(int r, int N,
                                                const std::string& cache_dir) {
  if (cache_dir.empty()) return colored_partitions(r, N);
  const auto path = cache_path(r, N, cache_dir);
  std::vector<ColoredPartition> parts;
  if (load_cache(path, r, parts)) return parts;
  parts = colored_partitions(r, N);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return parts;  // cache is best-effort
    for (const auto& cp : parts) out << partition_json(cp).dump() << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
  return parts;
}

}  // namespace orbidt
