#ifndef ORBIDT_VERTEX_HPP
#define ORBIDT_VERTEX_HPP

#include <vector>

#include "orbidt/claurent.hpp"
#include "orbidt/laurent.hpp"
#include "orbidt/partitions.hpp"

namespace orbidt {

// Multiset of tangent weights, each with integer exponents (doubled entries
// even); repeated weights appear repeatedly.
using WeightList = std::vector<ExponentVec>;

// Character of the structure sheaf of the box configuration, arity 3.
LaurentPoly character_poly(const PlanePartition& pp);

// Virtual tangent character at the fixed point.  With Q the character and
// Qbar its dual, the raw class is Q - Qbar/kappa + Q*Qbar*(1-t1)(1-t2)(1-t3)/kappa,
// returned in the dualized convention so single boxes give t1+t2+t3-..., cf.
// tests.  The result has no constant term and satisfies the kappa-duality
// coeff(kappa/m) = -coeff(m).
LaurentPoly virtual_tangent(const PlanePartition& pp);

// Monomials t1^a t2^b t3^c with a = b mod r.
LaurentPoly invariant_part(const LaurentPoly& p, int r);

// Write T = sum_w (w - kappa/w) by greedy extraction of the lexicographically
// smallest positive monomial.  Throws errc::duality_violation when T fails
// the duality/zero-constant invariants and errc::pairing_failure when a
// positive monomial lacks its negative kappa-partner.
WeightList pair_weights(const LaurentPoly& T);

// prod_w [kappa/w]/[w] evaluated exactly at pt.
Rational ahat_eval(const WeightList& W, const RationalPoint& pt);

// Limit t1,t3 -> 0 with |t1| << |t3| at fixed kappa.  A weight
// w = t1^a t2^b t3^c behaves like t1^(a-b) t3^(c-b) kappa^b, contributing
// -c for w -> 0, -1/c for w -> infinity, and the neutral fraction
// (c^(1-b) - c^(b-1)) / (c^b - c^(-b)) for w = kappa^b.  Throws
// errc::neutral_zero when a neutral weight has b = 0.
CRational ahat_limit(const WeightList& W);

}  // namespace orbidt

#endif
