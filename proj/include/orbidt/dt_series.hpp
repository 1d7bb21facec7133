#ifndef ORBIDT_DT_SERIES_HPP
#define ORBIDT_DT_SERIES_HPP

#include <vector>

#include "orbidt/qseries.hpp"
#include "orbidt/vertex.hpp"

namespace orbidt {

// Tangent weights of the fixed-locus contribution of one partition.
WeightList partition_weights(const PlanePartition& pp, int r);

// Brute-force localization series: coefficient of q^alpha is
// sum over partitions of that color of (-1)^{alpha_0} * ahat at pt.
QSeries<Rational> z_enumerated_point(const std::vector<ColoredPartition>& parts,
                                     int r, int N, const RationalPoint& pt,
                                     int jobs = 1);

// Same sum in the rigid limit, evaluated through the weight classification.
QSeries<CRational> z_enumerated_limit(const std::vector<ColoredPartition>& parts,
                                      int r, int N, int jobs = 1);

// Independent limit route: coefficient of q^alpha is sum of c^index over
// partitions of that color, using only the combinatorial index.
QSeries<CPoly> z_index_limit(const std::vector<ColoredPartition>& parts, int r,
                             int N);

// Signed box count: sum of (-1)^{alpha_0} q^alpha.
QSeries<Rational> z_signed_count(const std::vector<ColoredPartition>& parts,
                                 int r, int N);

}  // namespace orbidt

#endif
