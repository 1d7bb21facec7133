#include "orbidt/vertex.hpp"

namespace orbidt {

LaurentPoly character_poly(const PlanePartition& pp) {
  LaurentPoly q(3);
  for (const Box& b : pp) q.add_term({2 * b.i1, 2 * b.i2, 2 * b.i3}, 1);
  return q;
}

LaurentPoly virtual_tangent(const PlanePartition& pp) {
  const LaurentPoly q = character_poly(pp);
  const LaurentPoly qbar = dual(q);
  const LaurentPoly inv_kappa = LaurentPoly::monomial({-2, -2, -2});

  LaurentPoly vanishing = LaurentPoly::constant(3, 1);  // (1-t1)(1-t2)(1-t3)
  for (int i = 0; i < 3; ++i) {
    ExponentVec t(3, 0);
    t[i] = 2;
    LaurentPoly f = LaurentPoly::constant(3, 1);
    f -= LaurentPoly::monomial(t);
    vanishing *= f;
  }

  LaurentPoly raw = q;
  raw -= qbar * inv_kappa;
  raw += q * qbar * vanishing * inv_kappa;
  LaurentPoly t = dual(raw);
  for (const auto& [e, c] : t.terms()) {
    if (exp_is_trivial(e))
      fail(errc::duality_violation, "tangent character has a constant term");
    if (t.coeff(kappa_over(e)) != -c)
      fail(errc::duality_violation, "tangent character is not kappa-self-dual");
  }
  return t;
}

LaurentPoly invariant_part(const LaurentPoly& p, int r) {
  if (r < 1) fail(errc::usage, "r must be >= 1");
  LaurentPoly out(p.arity());
  // Doubled exponents: t1^a t2^b with a = b mod r means e0 - e1 = 0 mod 2r.
  for (const auto& [e, c] : p.terms())
    if (((e[0] - e[1]) % (2 * r) + 2 * r) % (2 * r) == 0) out.add_term(e, c);
  return out;
}

WeightList pair_weights(const LaurentPoly& T) {
  if (T.arity() != 3) fail(errc::arity_mismatch, "tangent character must have arity 3");
  for (const auto& [e, c] : T.terms()) {
    if (!exp_is_integral(e)) fail(errc::domain_error, "non-integral tangent weight");
    if (c.get_den() != 1) fail(errc::domain_error, "non-integer tangent multiplicity");
  }

  // Greedy pairing terminates on any input passing the checks above: each
  // round removes one unit from a positive and one from a negative
  // coefficient, so the total mass strictly drops.
  LaurentPoly rem = T;
  WeightList W;
  while (!rem.is_zero()) {
    const ExponentVec* w = nullptr;
    for (const auto& [e, c] : rem.terms())
      if (c > 0) {
        w = &e;
        break;
      }
    if (w == nullptr) fail(errc::pairing_failure, "no positive monomial left");
    ExponentVec kw = kappa_over(*w);
    if (rem.coeff(kw) >= 0)
      fail(errc::pairing_failure, "positive monomial without negative kappa-partner");
    W.push_back(*w);
    ExponentVec wcopy = *w;  // rem mutates under add_term
    rem.add_term(kw, 1);
    rem.add_term(wcopy, -1);
  }
  return W;
}

Rational ahat_eval(const WeightList& W, const RationalPoint& pt) {
  Rational out(1);
  for (const ExponentVec& w : W)
    out *= bracket_value(kappa_over(w), pt) / bracket_value(w, pt);
  return out;
}

CRational ahat_limit(const WeightList& W) {
  CRational out = CRational::one();
  for (const ExponentVec& w : W) {
    const int a = w[0] / 2, b = w[1] / 2, c3 = w[2] / 2;
    const int x = a - b, y = c3 - b;
    if (x > 0 || (x == 0 && y > 0)) {
      out *= CRational(CPoly::monomial(1, -1));
    } else if (x < 0 || (x == 0 && y < 0)) {
      out *= CRational(CPoly::monomial(-1, -1));
    } else {
      if (b == 0) fail(errc::neutral_zero, "neutral weight with zero kappa power");
      CPoly num = CPoly::monomial(1 - b) - CPoly::monomial(b - 1);
      CPoly den = CPoly::monomial(b) - CPoly::monomial(-b);
      out *= CRational(std::move(num), std::move(den));
    }
  }
  return out;
}

}  // namespace orbidt
