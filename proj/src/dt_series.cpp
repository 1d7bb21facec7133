#include "orbidt/dt_series.hpp"

#include <future>

namespace orbidt {

WeightList partition_weights(const PlanePartition& pp, int r) {
  return pair_weights(invariant_part(virtual_tangent(pp), r));
}

namespace {

// Evaluate f over the partition list, possibly in parallel, and fold the
// (alpha, value) pairs into a series.  Addition is exact, so the merge order
// cannot change the result; chunks are still folded in order.
template <class C, class F>
QSeries<C> fold_partitions(const std::vector<ColoredPartition>& parts, int r,
                           int N, int jobs, F&& f) {
  QSeries<C> out(r, N);
  out.add_to(QKey(r, 0), CoeffOps<C>::one());  // empty partition
  auto run = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::pair<ColorVector, C>> vals;
    for (std::size_t i = lo; i < hi; ++i) {
      if (parts[i].boxes.empty()) continue;
      vals.emplace_back(parts[i].alpha, f(parts[i]));
    }
    return vals;
  };
  if (jobs <= 1) {
    for (auto& [k, v] : run(0, parts.size())) out.add_to(k, v);
    return out;
  }
  std::size_t chunk = (parts.size() + jobs - 1) / jobs;
  std::vector<std::future<std::vector<std::pair<ColorVector, C>>>> fut;
  for (std::size_t lo = 0; lo < parts.size(); lo += chunk)
    fut.push_back(std::async(std::launch::async, run, lo,
                             std::min(lo + chunk, parts.size())));
  for (auto& fu : fut)
    for (auto& [k, v] : fu.get()) out.add_to(k, v);
  return out;
}

Rational sign_of(const ColorVector& alpha) { return alpha[0] % 2 == 0 ? 1 : -1; }

}  // namespace

QSeries<Rational> z_enumerated_point(const std::vector<ColoredPartition>& parts,
                                     int r, int N, const RationalPoint& pt,
                                     int jobs) {
  return fold_partitions<Rational>(
      parts, r, N, jobs, [&](const ColoredPartition& cp) -> Rational {
        return sign_of(cp.alpha) * ahat_eval(partition_weights(cp.boxes, r), pt);
      });
}

QSeries<CRational> z_enumerated_limit(const std::vector<ColoredPartition>& parts,
                                      int r, int N, int jobs) {
  return fold_partitions<CRational>(parts, r, N, jobs, [&](const ColoredPartition& cp) {
    CRational v = ahat_limit(partition_weights(cp.boxes, r));
    v *= CRational(CPoly::constant(sign_of(cp.alpha)));
    return v;
  });
}

QSeries<CPoly> z_index_limit(const std::vector<ColoredPartition>& parts, int r,
                             int N) {
  // (-1)^{alpha_0} (-c)^{index} collapses to c^{index}: every 0-colored box
  // contributes one sign to each factor.
  return fold_partitions<CPoly>(parts, r, N, 1, [&](const ColoredPartition& cp) {
    return CPoly::monomial(cp.index);
  });
}

QSeries<Rational> z_signed_count(const std::vector<ColoredPartition>& parts,
                                 int r, int N) {
  return fold_partitions<Rational>(parts, r, N, 1,
                                   [&](const ColoredPartition& cp) { return sign_of(cp.alpha); });
}

}  // namespace orbidt
