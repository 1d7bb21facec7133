#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "orbidt/partitions.hpp"

using namespace orbidt;
using orbidt::testing::thrown_code;

namespace {

// MacMahon's generating function prod_k (1-q^k)^{-k}, truncated at degree N.
std::vector<long> macmahon_counts(int N) {
  std::vector<long> c(N + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= N; ++k) {
    for (int rep = 0; rep < k; ++rep) {
      for (int d = k; d <= N; ++d) c[d] += c[d - k];
    }
  }
  return c;
}

}  // namespace

TEST_CASE("plane partition counts match the generating function") {
  const auto want = macmahon_counts(10);
  CHECK(want[0] == 1);
  CHECK(want[1] == 1);
  CHECK(want[6] == 48);
  for (int n = 0; n <= 7; ++n)
    CHECK(plane_partitions(n).size() == static_cast<std::size_t>(want[n]));
}

TEST_CASE("two-box partitions are the three axis dominoes") {
  const auto pps = plane_partitions(2);
  REQUIRE(pps.size() == 3);
  const PlanePartition a{{0, 0, 0}, {0, 0, 1}};
  const PlanePartition b{{0, 0, 0}, {0, 1, 0}};
  const PlanePartition c{{0, 0, 0}, {1, 0, 0}};
  CHECK(std::count(pps.begin(), pps.end(), a) == 1);
  CHECK(std::count(pps.begin(), pps.end(), b) == 1);
  CHECK(std::count(pps.begin(), pps.end(), c) == 1);
  for (const auto& pp : pps) CHECK(is_plane_partition(pp));
}

TEST_CASE("order-ideal recognition") {
  CHECK(is_plane_partition({}));
  CHECK(is_plane_partition({{0, 0, 0}}));
  CHECK(!is_plane_partition({{1, 0, 0}}));
  CHECK(!is_plane_partition({{0, 0, 0}, {0, 2, 0}}));
}

TEST_CASE("colors count residues of i1 - i2") {
  // r = 2: box (1,0,0) has color 1, (0,1,0) has color -1 = 1 mod 2.
  CHECK(color_vector({{0, 0, 0}, {1, 0, 0}}, 2) == ColorVector{1, 1});
  CHECK(color_vector({{0, 0, 0}, {0, 1, 0}}, 2) == ColorVector{1, 1});
  CHECK(color_vector({{0, 0, 0}, {0, 1, 0}}, 3) == ColorVector{1, 0, 1});
  // Vertical boxes keep color 0.
  CHECK(color_vector({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}}, 3) == ColorVector{3, 0, 0});
  CHECK(color_vector({}, 2) == ColorVector{0, 0});
}

TEST_CASE("index examples") {
  CHECK(index_of({{0, 0, 0}}, 1) == 1);
  CHECK(index_of({{0, 0, 0}}, 2) == 1);
  // r = 1: every box is 0-colored.
  CHECK(index_of({{0, 0, 0}, {1, 0, 0}}, 1) == 0);   // sgn(0-1) + sgn(0)
  CHECK(index_of({{0, 0, 0}, {0, 1, 0}}, 1) == 2);
  CHECK(index_of({{0, 0, 0}, {0, 0, 1}}, 1) == 2);
  // r = 2: the off-diagonal box is 1-colored and does not contribute.
  CHECK(index_of({{0, 0, 0}, {1, 0, 0}}, 2) == 1);
}

TEST_CASE("diagonal slices round trip") {
  const PlanePartition pp{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  const auto sl = slices(pp);
  REQUIRE(sl.size() == 3);
  CHECK(sl.at(0) == Partition2D{2});
  CHECK(sl.at(1) == Partition2D{1});
  CHECK(sl.at(-1) == Partition2D{1});
  CHECK(from_slices(sl) == pp);

  for (int n = 0; n <= 6; ++n)
    for (const auto& p : plane_partitions(n)) CHECK(from_slices(slices(p)) == p);

  // Slices that violate interlacing cannot reassemble.
  std::map<int, Partition2D> bad{{0, {1}}, {1, {2}}};
  CHECK(thrown_code([&] { from_slices(bad); }) == errc::invalid_slicing);
}

TEST_CASE("interlacing is the horizontal-strip condition") {
  CHECK(interlaces({2, 1}, {1, 1}));
  CHECK(interlaces({2, 1}, {2}));
  CHECK(!interlaces({1, 1}, {2}));
  CHECK(interlaces({3}, {}));
  CHECK(!interlaces({}, {1}));
  CHECK(interlaces({}, {}));
}

TEST_CASE("slice interlacing holds inside every plane partition") {
  for (const auto& pp : plane_partitions(5)) {
    const auto sl = slices(pp);
    for (const auto& [k, la] : sl) {
      const auto it = sl.find(k + 1);
      if (k >= 0) {
        CHECK(interlaces(la, it == sl.end() ? Partition2D{} : it->second));
      } else {
        // The slice nearer the center dominates.
        REQUIRE(it != sl.end());
        CHECK(interlaces(it->second, la));
      }
    }
  }
}

TEST_CASE("ordinary partitions of n") {
  CHECK(partitions2d(0) == std::vector<Partition2D>{{}});
  CHECK(partitions2d(4).size() == 5);
  for (const auto& la : partitions2d(5))
    CHECK(std::is_sorted(la.rbegin(), la.rend()));
}

TEST_CASE("colored enumeration is consistent with the plain one") {
  const auto cps = colored_partitions(2, 4);
  std::size_t plain = 0;
  for (int n = 0; n <= 4; ++n) plain += plane_partitions(n).size();
  CHECK(cps.size() == plain);
  for (const auto& cp : cps) {
    CHECK(cp.alpha == color_vector(cp.boxes, 2));
    CHECK(cp.index == index_of(cp.boxes, 2));
  }
}

TEST_CASE("realized color vectors form the expected set") {
  const auto I = realized_colors(2, 6);
  CHECK(I.contains({1, 0}));
  CHECK(I.contains({1, 1}));
  CHECK(I.contains({0, 0}));
  CHECK(!I.contains({0, 1}));
  CHECK(!I.contains({0, 2}));
  CHECK(thrown_code([&] { I.contains({5, 4}); }) == errc::out_of_bound);

  const auto I3 = realized_colors(3, 5);
  CHECK(I3.contains({1, 1, 0}));
  CHECK(I3.contains({1, 0, 1}));
  CHECK(!I3.contains({0, 1, 0}));
  CHECK(!I3.contains({0, 0, 1}));
  CHECK(!I3.contains({0, 1, 1}));
}

TEST_CASE("I-partitions enumerate multisets from the semigroup") {
  const auto I1 = realized_colors(1, 8);
  // alpha = (3): 3 = 3 = 2+1 = 1+1+1.
  CHECK(I_partitions({3}, I1).size() == 3);

  const auto I2 = realized_colors(2, 8);
  const auto only11 = I_partitions({1, 1}, I2);
  REQUIRE(only11.size() == 1);
  CHECK(only11[0] == std::vector<ColorVector>{{1, 1}});

  const auto p21 = I_partitions({2, 1}, I2);
  REQUIRE(p21.size() == 2);
  // {(2,1)} and {(1,1),(1,0)}.
  const std::vector<ColorVector> a{{2, 1}};
  const std::vector<ColorVector> b{{1, 1}, {1, 0}};
  CHECK(std::count(p21.begin(), p21.end(), a) == 1);
  CHECK(std::count(p21.begin(), p21.end(), b) == 1);
}
