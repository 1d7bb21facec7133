#ifndef ORBIDT_PARTITIONS_HPP
#define ORBIDT_PARTITIONS_HPP

#include <map>
#include <set>
#include <vector>

#include "orbidt/error.hpp"

namespace orbidt {

// A box of a plane partition, i.e. a lattice point of the order ideal.
struct Box {
  int i1, i2, i3;
  auto operator<=>(const Box&) const = default;
};

// Boxes sorted lexicographically; this is the canonical representation.
using PlanePartition = std::vector<Box>;

// Ordinary partition as a weakly decreasing list of positive parts.
using Partition2D = std::vector<int>;

// Color multiplicity vector of length r; entry j counts boxes with
// (i1 - i2) = j mod r.  Also reused as a series key, where entries may be
// negative transiently.
using ColorVector = std::vector<int>;

bool is_plane_partition(const PlanePartition& pp);

// All plane partitions with exactly n boxes, canonically ordered.
std::vector<PlanePartition> plane_partitions(int n);

// Sizes 0..N concatenated in increasing size.
std::vector<PlanePartition> plane_partitions_up_to(int N);

// All ordinary partitions of n.
std::vector<Partition2D> partitions2d(int n);

ColorVector color_vector(const PlanePartition& pp, int r);

// Sum over 0-colored boxes of sgn(i2 - i1) with sgn(0) = +1.
int index_of(const PlanePartition& pp, int r);

// Diagonal slices: k -> partition formed by the boxes with i1 - i2 = k.
std::map<int, Partition2D> slices(const PlanePartition& pp);

// Inverse of slices(); throws errc::invalid_slicing when the slices do not
// reassemble into an order ideal.
PlanePartition from_slices(const std::map<int, Partition2D>& sl);

// Horizontal-strip condition mu_1 >= la_1 >= mu_2 >= la_2 >= ...
bool interlaces(const Partition2D& mu, const Partition2D& la);

// Precomputed combinatorial data for one partition.
struct ColoredPartition {
  PlanePartition boxes;
  ColorVector alpha;
  int index;
};

std::vector<ColoredPartition> colored_partitions(int r, int N);

// Color vectors realized by some plane partition, certified up to size N.
struct IndexSemigroup {
  int r = 1;
  int N = 0;
  std::set<ColorVector> realized;

  // errc::out_of_bound past the certification bound N.
  bool contains(const ColorVector& a) const;
};

IndexSemigroup realized_colors(int r, int N);

// Multisets of nonzero elements of I summing to alpha, each multiset listed
// in weakly decreasing lexicographic order.  alpha must lie in I.
std::vector<std::vector<ColorVector>> I_partitions(const ColorVector& alpha,
                                                   const IndexSemigroup& I);

}  // namespace orbidt

#endif
