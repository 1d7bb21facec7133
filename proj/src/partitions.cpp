#include "orbidt/partitions.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace orbidt {

bool is_plane_partition(const PlanePartition& pp) {
  std::set<Box> have(pp.begin(), pp.end());
  if (have.size() != pp.size()) return false;
  for (const Box& b : pp) {
    if (b.i1 < 0 || b.i2 < 0 || b.i3 < 0) return false;
    if (b.i1 > 0 && !have.count({b.i1 - 1, b.i2, b.i3})) return false;
    if (b.i2 > 0 && !have.count({b.i1, b.i2 - 1, b.i3})) return false;
    if (b.i3 > 0 && !have.count({b.i1, b.i2, b.i3 - 1})) return false;
  }
  return true;
}

namespace {

// Row-by-row extension: every plane partition is a stack of ordinary
// partitions, each row dominated entrywise by the one before it.
struct PPEnum {
  int target = 0;
  std::vector<Partition2D> rows;
  std::vector<PlanePartition> out;

  void emit() {
    PlanePartition pp;
    for (int i = 0; i < (int)rows.size(); ++i)
      for (int j = 0; j < (int)rows[i].size(); ++j)
        for (int k = 0; k < rows[i][j]; ++k) pp.push_back({i, j, k});
    std::sort(pp.begin(), pp.end());
    out.push_back(std::move(pp));
  }

  void next_row(int used) {
    if (used == target) {
      emit();
      return;
    }
    rows.emplace_back();
    grow_row(used, 0, INT_MAX);
    rows.pop_back();
  }

  void grow_row(int used, int pos, int last) {
    if (pos > 0) next_row(used);  // current row taken as complete
    const Partition2D* prev = rows.size() >= 2 ? &rows[rows.size() - 2] : nullptr;
    int bound = std::min(last, target - used);
    if (prev) bound = std::min(bound, pos < (int)prev->size() ? (*prev)[pos] : 0);
    for (int v = 1; v <= bound; ++v) {
      rows.back().push_back(v);
      grow_row(used + v, pos + 1, v);
      rows.back().pop_back();
    }
  }
};

}  // namespace

std::vector<PlanePartition> plane_partitions(int n) {
  if (n < 0) fail(errc::usage, "negative box count");
  PPEnum e;
  e.target = n;
  e.next_row(0);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

std::vector<PlanePartition> plane_partitions_up_to(int N) {
  std::vector<PlanePartition> out;
  for (int n = 0; n <= N; ++n) {
    auto part = plane_partitions(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Partition2D> partitions2d(int n) {
  std::vector<Partition2D> out;
  Partition2D cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = std::min(remaining, maxpart); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

ColorVector color_vector(const PlanePartition& pp, int r) {
  if (r < 1) fail(errc::usage, "r must be >= 1");
  ColorVector alpha(r, 0);
  for (const Box& b : pp) alpha[((b.i1 - b.i2) % r + r) % r]++;
  return alpha;
}

int index_of(const PlanePartition& pp, int r) {
  if (r < 1) fail(errc::usage, "r must be >= 1");
  int idx = 0;
  for (const Box& b : pp)
    if ((b.i1 - b.i2) % r == 0) idx += b.i2 >= b.i1 ? 1 : -1;
  return idx;
}

std::map<int, Partition2D> slices(const PlanePartition& pp) {
  std::map<int, std::set<std::pair<int, int>>> cells;
  for (const Box& b : pp)
    cells[b.i1 - b.i2].insert({std::min(b.i1, b.i2), b.i3});
  std::map<int, Partition2D> out;
  for (const auto& [k, cs] : cells) {
    Partition2D la;
    for (const auto& [a, b] : cs) {
      if (a > (int)la.size()) fail(errc::invalid_slicing, "gap in slice rows");
      if (a == (int)la.size()) la.push_back(0);
      if (b != la[a]) fail(errc::invalid_slicing, "gap in slice columns");
      la[a]++;
    }
    for (std::size_t i = 1; i < la.size(); ++i)
      if (la[i] > la[i - 1]) fail(errc::invalid_slicing, "slice is not a partition");
    out[k] = std::move(la);
  }
  return out;
}

PlanePartition from_slices(const std::map<int, Partition2D>& sl) {
  PlanePartition pp;
  for (const auto& [k, la] : sl) {
    for (std::size_t a = 0; a < la.size(); ++a) {
      if (la[a] < 0 || (a > 0 && la[a] > la[a - 1]))
        fail(errc::invalid_slicing, "slice is not a partition");
      for (int b = 0; b < la[a]; ++b)
        pp.push_back({(int)a + std::max(k, 0), (int)a + std::max(-k, 0), b});
    }
  }
  std::sort(pp.begin(), pp.end());
  if (!is_plane_partition(pp))
    fail(errc::invalid_slicing, "slices do not reassemble into an order ideal");
  return pp;
}

bool interlaces(const Partition2D& mu, const Partition2D& la) {
  std::size_t n = std::max(mu.size(), la.size());
  auto part = [](const Partition2D& p, std::size_t i) {
    return i < p.size() ? p[i] : 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (part(mu, i) < part(la, i)) return false;
    if (part(la, i) < part(mu, i + 1)) return false;
  }
  return true;
}

std::vector<ColoredPartition> colored_partitions(int r, int N) {
  std::vector<ColoredPartition> out;
  for (auto& pp : plane_partitions_up_to(N)) {
    ColoredPartition cp;
    cp.alpha = color_vector(pp, r);
    cp.index = index_of(pp, r);
    cp.boxes = std::move(pp);
    out.push_back(std::move(cp));
  }
  return out;
}

bool IndexSemigroup::contains(const ColorVector& a) const {
  if ((int)a.size() != r) fail(errc::arity_mismatch, "color vector length != r");
  int total = 0;
  for (int v : a) {
    if (v < 0) return false;
    total += v;
  }
  if (total > N) fail(errc::out_of_bound, "color vector beyond certification bound");
  return realized.count(a) > 0;
}

IndexSemigroup realized_colors(int r, int N) {
  IndexSemigroup I;
  I.r = r;
  I.N = N;
  for (const auto& cp : colored_partitions(r, N)) I.realized.insert(cp.alpha);
  return I;
}

std::vector<std::vector<ColorVector>> I_partitions(const ColorVector& alpha,
                                                   const IndexSemigroup& I) {
  if (!I.contains(alpha)) fail(errc::domain_error, "alpha not realized in I");
  std::vector<ColorVector> parts;
  for (const auto& a : I.realized) {
    bool zero = true;
    for (int v : a) zero = zero && v == 0;
    if (!zero) parts.push_back(a);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());

  std::vector<std::vector<ColorVector>> out;
  std::vector<ColorVector> cur;
  auto fits = [](const ColorVector& rem, const ColorVector& p) {
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (p[i] > rem[i]) return false;
    return true;
  };
  auto rec = [&](auto&& self, ColorVector rem, std::size_t start) -> void {
    bool done = true;
    for (int v : rem) done = done && v == 0;
    if (done) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < parts.size(); ++i) {
      if (!fits(rem, parts[i])) continue;
      ColorVector next = rem;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] -= parts[i][j];
      cur.push_back(parts[i]);
      self(self, std::move(next), i);
      cur.pop_back();
    }
  };
  rec(rec, alpha, 0);
  return out;
}

}  // namespace orbidt
