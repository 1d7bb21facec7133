#ifndef ORBIDT_TRANSFER_HPP
#define ORBIDT_TRANSFER_HPP

#include <map>

#include "orbidt/qseries.hpp"

namespace orbidt {

// Monomial argument of a half-vertex operator: key shift and power of c
// accrued per unit of partition growth; zero makes the operator the identity.
struct GammaArg {
  QKey shift;
  int c_exp = 0;
  bool zero = false;
};

// Sparse vector in the partition basis, one graded amplitude per partition.
struct StateVector {
  int width;
  int order;
  int max_size;  // cap on |lambda| (larger states cannot reach the order)
  std::map<Partition2D, QSeries<CPoly>> amps;
};

StateVector vacuum_state(int width, int order, int max_size,
                         const Partition2D& la = {});

// Gamma_-(x)|la> = sum over mu interlacing above la of x^(|mu|-|la|) |mu>.
void apply_gamma_minus(StateVector& st, const GammaArg& arg);
// Gamma_+(x)|la> = sum over mu interlacing below la of x^(|la|-|mu|) |mu>.
void apply_gamma_plus(StateVector& st, const GammaArg& arg);
// Q/K weights: per box of lambda, shift keys by per_box and multiply c^c_exp.
void apply_diag(StateVector& st, const QKey& per_box, int c_exp);

QSeries<CPoly> vacuum_amplitude(const StateVector& st);

// <0| A-bar_+(1)^N A-bar_-(1)^N |0>: the diagonal slice at k carries q_(k mod r)
// per box, c^-1 per box on positive slices divisible by r, c^+1 on the center
// and negative ones; exact for total degree <= N.
QSeries<CRational> z_limit(int r, int N);

// The same walk with trivial weights (r = 1, no K): plane-partition counts by
// volume n = 0..N.
std::vector<Int> transfer_plain(int N);

// Gamma_+(a) Gamma_-(b) = (1 - ab)^(-1) Gamma_-(b) Gamma_+(a) on every basis
// partition with |la| <= N, compared to total key degree N.
bool check_gamma_commutation(const GammaArg& a, const GammaArg& b, int N);

// A_+(x) A_-(y) = C_r(x,y) A_-(y) A_+(x) with
// C_r = prod_{i,j} (1 - xy q (q_[0,i]/q_[0,j]) c)^(-1), compared on keys of
// joint xy-degree <= N; key layout: r q-slots, then x, then y.
bool check_A_commutation(int r, int N, int basis_max = 2);

}  // namespace orbidt

#endif
