#ifndef ORBIDT_PLETH_HPP
#define ORBIDT_PLETH_HPP

#include <array>
#include <map>

#include "orbidt/dt_series.hpp"
#include "orbidt/qseries.hpp"

namespace orbidt {

// One summand of a closed formula: a scalar multiple of a leading monomial
// (t part and q part kept separately) times bracket factors.  q-dependent
// denominators only ever occur as the recognized pair
// [u q^beta][u q^(-beta)] = u + 1/u - q^beta - q^(-beta), which expands as
// the geometric series -sum_{k>=1} h_{k-1}(u, 1/u) q^(k beta).
struct BracketTerm {
  Rational scalar = 1;
  ExponentVec lead_t{0, 0, 0};            // doubled exponents, arity 3
  QKey lead_q;                            // integer exponents, length r
  std::vector<ExponentVec> num_brackets;  // t-monomials, integer exponents
  std::vector<ExponentVec> den_brackets;
  struct DPair {
    ExponentVec u;  // doubled t-monomial, usually kappa^(1/2)
    QKey beta;      // integer q-exponents
  };
  std::vector<DPair> pairs;
};

struct SymbolicSum {
  int r = 1;
  std::vector<BracketTerm> terms;
};

SymbolicSum concat(SymbolicSum a, const SymbolicSum& b);
SymbolicSum adams_sum(const SymbolicSum& s, int n);

// Adams action on the t-content only (q-exponents untouched); this is the
// coefficient-ring twist a plog family member carries at level n.
SymbolicSum adams_t_only(const SymbolicSum& s, int n);

// Smallest total q-degree the term's expansion can reach.
int term_valuation(const BracketTerm& t);

// Orbifold vertex contribution of one chart with weights w1 w2 w3 = kappa
// (undoubled integer exponent triples; errc::calabi_yau_violation otherwise):
// [w2w3][w1w3][w1w2] / ([w1][w2][w3] [kappa^(1/2)q][kappa^(1/2)/q]).
SymbolicSum build_F(int r, const std::array<int, 3>& w1,
                    const std::array<int, 3>& w2, const std::array<int, 3>& w3);

// Sum of build_F over the r fixed charts of the crepant resolution.
SymbolicSum build_F_r(int r);

// Off-diagonal colored part:
// [t1t2]/([t3][kappa^(1/2)q][kappa^(1/2)/q]) sum_{0<i<=j<r} (q_[i,j] + 1/q_[i,j]).
SymbolicSum build_F_col(int r);

// Rigid limit: -kappa^(1/2)/([kappa^(1/2)q][kappa^(1/2)/q])
//              sum_{i,j=0}^{r-1} q_[0,i]/q_[0,j].
SymbolicSum build_F_limit(int r);

// Numerical specialization: -1/([q][1/q]) (r + sum_{0<i<=j<r}(q_[i,j] + 1/q_[i,j])).
// The q0 sign flip is applied after expansion, see flip_q0.
SymbolicSum build_F_num(int r);

// Evaluation contexts for expand_term / pexp_eval.

struct PointCtx {
  using Coeff = Rational;
  const RationalPoint* pt = nullptr;

  Rational from_scalar(const Rational& s) const { return s; }
  Rational value_mono(const ExponentVec& e) const {
    if (exp_is_trivial(e)) return 1;
    if (pt == nullptr) fail(errc::domain_error, "t-content needs an evaluation point");
    return evaluate_monomial(e, *pt);
  }
  Rational value_bracket(const ExponentVec& m) const {
    if (pt == nullptr) fail(errc::domain_error, "bracket needs an evaluation point");
    return bracket_value(m, *pt);
  }
  void divide(Rational& v, const ExponentVec& m) const { v /= value_bracket(m); }
};

// Everything must be a power of kappa; values are Laurent polynomials in c.
struct CRingCtx {
  using Coeff = CPoly;

  CPoly from_scalar(const Rational& s) const { return CPoly::constant(s); }
  CPoly value_mono(const ExponentVec& e) const {
    if (e[0] != e[1] || e[1] != e[2])
      fail(errc::non_kappa_content, "t-content is not a kappa power");
    return CPoly::monomial(e[0]);
  }
  CPoly value_bracket(const ExponentVec& m) const {
    if (m[0] != m[1] || m[1] != m[2] || m[0] % 2 != 0)
      fail(errc::non_kappa_content, "bracket weight is not an integer kappa power");
    if (m[0] == 0) fail(errc::zero_weight, "bracket of the trivial weight");
    return CPoly::monomial(m[0] / 2) - CPoly::monomial(-m[0] / 2);
  }
  void divide(CPoly&, const ExponentVec&) const {
    fail(errc::domain_error, "denominator brackets have no expansion in the c ring");
  }
};

// Keep the t-content as exact Laurent polynomials (arity 3).
struct SymbolicCtx {
  using Coeff = LaurentPoly;

  LaurentPoly from_scalar(const Rational& s) const {
    return LaurentPoly::constant(3, s);
  }
  LaurentPoly value_mono(const ExponentVec& e) const {
    return LaurentPoly::monomial(e);
  }
  LaurentPoly value_bracket(const ExponentVec& m) const { return bracket(m); }
  void divide(LaurentPoly&, const ExponentVec&) const {
    fail(errc::domain_error, "denominator brackets have no symbolic expansion");
  }
};

// -sum_{k>=1} h_{k-1}(u, 1/u) q^(k beta) up to total degree M.
template <class Ctx>
QSeries<typename Ctx::Coeff> pair_expansion(const BracketTerm::DPair& p,
                                            const Ctx& ctx, int r, int M) {
  using C = typename Ctx::Coeff;
  QKey beta = p.beta;
  if ((int)beta.size() != r) fail(errc::arity_mismatch, "pair q-width mismatch");
  if (key_total(beta) < 0)
    for (int& v : beta) v = -v;  // the pair is symmetric under beta -> -beta
  const int step = key_total(beta);
  if (step <= 0) fail(errc::domain_error, "pair expansion is not ascending");
  QSeries<C> out(r, M);
  for (int k = 1; k * step <= M; ++k) {
    C h = ctx.from_scalar(0);
    for (int j = 0; j <= k - 1; ++j)
      h += ctx.value_mono(exp_pow(p.u, (k - 1) - 2 * j));
    CoeffOps<C>::scale(h, Rational(-1));
    QKey key(r);
    for (int i = 0; i < r; ++i) key[i] = k * beta[i];
    out.add_to(key, h);
  }
  return out;
}

// Series expansion of one term: evaluated prefactor times the product of its
// pair expansions, shifted by the leading q-monomial.
template <class Ctx>
QSeries<typename Ctx::Coeff> expand_term(const BracketTerm& t, const Ctx& ctx,
                                         int r, int N) {
  using C = typename Ctx::Coeff;
  if ((int)t.lead_q.size() != r) fail(errc::arity_mismatch, "term q-width mismatch");
  C val = ctx.from_scalar(t.scalar);
  val = val * ctx.value_mono(t.lead_t);
  for (const auto& m : t.num_brackets) val = val * ctx.value_bracket(m);
  for (const auto& m : t.den_brackets) ctx.divide(val, m);

  // Negative leading q-total needs extra working order so nothing at total
  // degree <= N is lost after the shift.
  const int slack = std::max(0, -key_total(t.lead_q));
  QSeries<C> prod(r, N + slack);
  prod.add_to(QKey(r, 0), CoeffOps<C>::one());
  for (const auto& p : t.pairs) prod = prod * pair_expansion(p, ctx, r, N + slack);

  QSeries<C> out(r, N);
  for (const auto& [k, v] : prod.coeffs()) {
    QKey kk = k;
    for (int i = 0; i < r; ++i) kk[i] += t.lead_q[i];
    out.add_to(kk, v * val);
  }
  return out;
}

template <class Ctx>
QSeries<typename Ctx::Coeff> expand_sum(const SymbolicSum& s, const Ctx& ctx,
                                        int N) {
  QSeries<typename Ctx::Coeff> acc(s.r, N);
  for (const auto& t : s.terms) acc += expand_term(t, ctx, s.r, N);
  return acc;
}

// PExp(S) = exp(sum_{n>=1} psi_n(S)(q^n)/n).  Levels n > N cannot reach
// total degree <= N because every term has positive q-valuation.
template <class Ctx>
QSeries<typename Ctx::Coeff> pexp_eval(const SymbolicSum& s, const Ctx& ctx,
                                       int N) {
  for (const auto& t : s.terms)
    if (term_valuation(t) < 1)
      fail(errc::exp_domain, "plethystic exponential needs positive q-valuation");
  QSeries<typename Ctx::Coeff> acc(s.r, N);
  for (int n = 1; n <= N; ++n) {
    auto en = expand_sum(adams_sum(s, n), ctx, N);
    en.scale(Rational(1) / n);
    acc += en;
  }
  return exp_series(acc);
}

inline QSeries<Rational> pexp_point(const SymbolicSum& s, const RationalPoint& pt,
                                    int N) {
  return pexp_eval(s, PointCtx{&pt}, N);
}
inline QSeries<CPoly> pexp_cring(const SymbolicSum& s, int N) {
  return pexp_eval(s, CRingCtx{}, N);
}
inline QSeries<LaurentPoly> pexp_symbolic(const SymbolicSum& s, int N) {
  return pexp_eval(s, SymbolicCtx{}, N);
}

// Moebius values mu(1..N).
std::vector<int> mobius_table(int N);

// Plethystic logarithm: family(n) must be the series with its coefficient
// ring at Adams level n (t-arguments raised to the n-th power); returns the
// level-1 input of PExp.
template <class C, class Family>
QSeries<C> plog(Family&& family, int width, int N) {
  auto mu = mobius_table(N);
  QSeries<C> acc(width, N);
  for (int n = 1; n <= N; ++n) {
    if (mu[n] == 0) continue;
    QSeries<C> ln = scale_keys(log_series(family(n)), n);
    ln.scale(Rational(mu[n]) / n);
    acc += ln;
  }
  return acc;
}

// q0 -> -q0: multiply the coefficient of q^alpha by (-1)^(alpha_0).
template <class C>
QSeries<C> flip_q0(const QSeries<C>& f) {
  QSeries<C> out(f.width(), f.order());
  for (const auto& [k, v] : f.coeffs()) {
    C vv = v;
    if (k[0] % 2 != 0) CoeffOps<C>::scale(vv, Rational(-1));
    out.add_to(k, vv);
  }
  return out;
}

// Combinatorial plethystic exponential over the realized-color semigroup:
// coefficient of q^alpha is the sum over I-partitions of alpha of products of
// complete homogeneous symmetric powers of the assigned monomial multisets.
using MonomialAssignment = std::map<ColorVector, std::vector<ExponentVec>>;

// Complete homogeneous symmetric power h_l of a monomial multiset.
LaurentPoly hsym(const std::vector<ExponentVec>& monos, int l);

QSeries<LaurentPoly> pexp_direct(const MonomialAssignment& asg,
                                 const IndexSemigroup& I, int N);

// SymbolicSum with one plain term per assigned monomial (no brackets), the
// input whose pexp_eval must match pexp_direct.
SymbolicSum assignment_sum(const MonomialAssignment& asg, int r);

// All rigidity coefficients at once: (plog Z - F_r expansion) / value of
// [t1t2]/[t3] as a series; coefficient of q^alpha is h_alpha(pt).
QSeries<Rational> rigidity_h_series(const std::vector<ColoredPartition>& parts,
                                    int r, int N, const RationalPoint& pt,
                                    int jobs = 1);

// Coefficient h_alpha of the open-locus factorization at pt.
Rational rigidity_h_at(const std::vector<ColoredPartition>& parts, int r, int N,
                       const ColorVector& alpha, const RationalPoint& pt,
                       int jobs = 1);

// h_alpha at two points with the same kappa; rigidity predicts equal values.
std::pair<Rational, Rational> rigidity_h(const std::vector<ColoredPartition>& parts,
                                         int r, int N, const ColorVector& alpha,
                                         const RationalPoint& pt1,
                                         const RationalPoint& pt2, int jobs = 1);

}  // namespace orbidt

#endif
