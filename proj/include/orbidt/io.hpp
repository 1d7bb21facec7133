#ifndef ORBIDT_IO_HPP
#define ORBIDT_IO_HPP

#include <json.hpp>
#include <string>

#include "orbidt/dt_series.hpp"

namespace orbidt {

using Json = nlohmann::ordered_json;

// Big integers and rationals are emitted as decimal strings; exponents as
// plain integers (t-exponents doubled, flagged by "doubled": true).

Json partition_json(const ColoredPartition& cp);  // {"boxes","alpha","index"}
Json vertex_report_json(const ColoredPartition& cp, const WeightList& W,
                        const Rational& ahat);

Json laurent_json(const LaurentPoly& p);
Json cpoly_json(const CPoly& p);      // [[exp, "coef"], ...], integer-scaled
Json crational_json(const CRational& v);  // {"num": [...], "den": [...]}

// {"r","N","mode","coefficients":[{"alpha":[...],"value":...}]}
Json series_json(const QSeries<Rational>& f, const std::string& mode);
Json series_json(const QSeries<CRational>& f, const std::string& mode);
Json series_json(const QSeries<CPoly>& f, const std::string& mode);
Json series_json(const QSeries<LaurentPoly>& f, const std::string& mode);

// alpha flattened dash-joined, one row per coefficient; JSON stays the
// source of truth for structured values.
std::string series_csv(const Json& series);

std::string dump(const Json& j);

// Enumerate colored partitions, backed by a JSON-lines cache keyed by a
// content hash of (r, N, format version); empty cache_dir disables caching.
std::vector<ColoredPartition> load_or_enumerate(int r, int N,
                                                const std::string& cache_dir);

}  // namespace orbidt

#endif
