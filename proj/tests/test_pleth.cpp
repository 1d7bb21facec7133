#include <doctest.h>

#include "helpers.hpp"
#include "orbidt/pleth.hpp"

using namespace orbidt;
using orbidt::testing::thrown_code;

namespace {
const RationalPoint kPt{Rational(2), Rational(3), Rational(5)};
const std::array<int, 3> kW1{1, 0, 0}, kW2{0, 1, 0}, kW3{0, 0, 1};
}

TEST_CASE("build_F validates its weights") {
  CHECK(thrown_code([] { build_F(1, {0, 0, 0}, {1, 1, 0}, {0, 0, 1}); }) ==
        errc::zero_weight);
  CHECK(thrown_code([] { build_F(1, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}); }) ==
        errc::calabi_yau_violation);
}

TEST_CASE("one-chart formula is symmetric in its weights") {
  const auto a = expand_sum(build_F(1, kW1, kW2, kW3), PointCtx{&kPt}, 3);
  const auto b = expand_sum(build_F(1, kW2, kW3, kW1), PointCtx{&kPt}, 3);
  CHECK(a == b);
  // An asymmetric triple with w1 w2 w3 = kappa.
  const auto c = expand_sum(build_F(1, {1, -1, 0}, {0, 2, 0}, {0, 0, 1}),
                            PointCtx{&kPt}, 3);
  const auto d = expand_sum(build_F(1, {0, 2, 0}, {0, 0, 1}, {1, -1, 0}),
                            PointCtx{&kPt}, 3);
  CHECK(c == d);
}

TEST_CASE("leading coefficient matches the one-box localization weight") {
  const auto f = expand_sum(build_F(1, kW1, kW2, kW3), PointCtx{&kPt}, 1);
  const Rational ahat = ahat_eval(partition_weights({{0, 0, 0}}, 1), kPt);
  CHECK(f.coeff(QKey{1}) == -ahat);
  // At degree one PExp is the identity on the argument.
  CHECK(pexp_point(build_F(1, kW1, kW2, kW3), kPt, 1).coeff(QKey{1}) == -ahat);
}

TEST_CASE("kappa pair expands to the geometric series") {
  BracketTerm t;
  t.lead_q = QKey{0};
  t.pairs = {{ExponentVec{1, 1, 1}, QKey{1}}};
  SymbolicSum s{1, {t}};
  const auto S = expand_sum(s, CRingCtx{}, 5);
  CHECK(S.coeff(QKey{1}) == CPoly::constant(-1));
  CHECK(S.coeff(QKey{2}) == CPoly::monomial(1, -1) + CPoly::monomial(-1, -1));
  CHECK(S.coeff(QKey{3}) == CPoly::monomial(2, -1) + CPoly::constant(-1) +
                                CPoly::monomial(-2, -1));

  // Multiplying back by c + 1/c - q - 1/q recovers 1 (up to truncation).
  QSeries<CPoly> D(1, 5);
  D.add_to(QKey{0}, CPoly::monomial(1) + CPoly::monomial(-1));
  D.add_to(QKey{1}, CPoly::constant(-1));
  D.add_to(QKey{-1}, CPoly::constant(-1));
  const auto prod = D * S;
  CHECK(prod.coeff(QKey{0}).is_one());
  for (int k = 1; k <= 4; ++k) CHECK(prod.coeff(QKey{k}).is_zero());
}

TEST_CASE("colored part starts with the invariant bracket ratio") {
  const auto f = expand_sum(build_F_col(2), PointCtx{&kPt}, 1);
  const Rational ratio =
      bracket_value({2, 2, 0}, kPt) / bracket_value({0, 0, 2}, kPt);
  CHECK(f.coeff(QKey{1, 0}) == -ratio);
  CHECK(f.coeff(QKey{0, 1}) == 0);
  CHECK(build_F_col(1).terms.empty());
}

TEST_CASE("limit formula agrees with its folded form") {
  for (int r = 2; r <= 3; ++r) {
    // -kappa^(1/2) (r + sum_{0<i<=j<r} (q_[i,j] + 1/q_[i,j])) / D equals the
    // double sum over intervals [0,i], [0,j].
    SymbolicSum alt;
    alt.r = r;
    const BracketTerm::DPair kp{ExponentVec{1, 1, 1}, QKey(r, 1)};
    BracketTerm base;
    base.scalar = Rational(-r);
    base.lead_t = {1, 1, 1};
    base.lead_q = QKey(r, 0);
    base.pairs = {kp};
    alt.terms.push_back(base);
    for (int i = 1; i < r; ++i)
      for (int j = i; j < r; ++j) {
        QKey key(r, 0);
        for (int k = i; k <= j; ++k) key[k] = 1;
        for (int sign : {1, -1}) {
          BracketTerm t;
          t.scalar = Rational(-1);
          t.lead_t = {1, 1, 1};
          t.lead_q = key;
          if (sign < 0)
            for (int& v : t.lead_q) v = -v;
          t.pairs = {kp};
          alt.terms.push_back(t);
        }
      }
    CHECK(expand_sum(build_F_limit(r), CRingCtx{}, 5) ==
          expand_sum(alt, CRingCtx{}, 5));
  }
}

TEST_CASE("limit series for the trivial group") {
  const auto z = pexp_cring(build_F_limit(1), 2);
  CHECK(z.coeff(QKey{0}).is_one());
  CHECK(z.coeff(QKey{1}) == CPoly::monomial(1));
  CHECK(z.coeff(QKey{2}) == CPoly::monomial(2, 2) + CPoly::one());
}

TEST_CASE("numerical formula and the sign flip") {
  // -1/([q][1/q]) = q + 2q^2 + 3q^3 + ...; flipping q -> -q alternates.
  const auto f = flip_q0(expand_sum(build_F_num(1), PointCtx{}, 3));
  CHECK(f.coeff(QKey{1}) == -1);
  CHECK(f.coeff(QKey{2}) == 2);
  CHECK(f.coeff(QKey{3}) == -3);

  // The full exponential gives signed box counts: 1, -1, 3, -6, 13.
  const auto z = flip_q0(pexp_eval(build_F_num(1), PointCtx{}, 4));
  CHECK(z.coeff(QKey{0}) == 1);
  CHECK(z.coeff(QKey{1}) == -1);
  CHECK(z.coeff(QKey{2}) == 3);
  CHECK(z.coeff(QKey{3}) == -6);
  CHECK(z.coeff(QKey{4}) == 13);
}

TEST_CASE("adams action scales both gradings") {
  // -1/([q][1/q]) = q + 2q^2 + ... becomes q^2 + 2q^4 + ... at level two.
  const auto f = expand_sum(adams_sum(build_F_num(1), 2), PointCtx{}, 4);
  CHECK(f.coeff(QKey{1}) == 0);
  CHECK(f.coeff(QKey{2}) == 1);
  CHECK(f.coeff(QKey{3}) == 0);
  CHECK(f.coeff(QKey{4}) == 2);
}

TEST_CASE("contexts reject content outside their ring") {
  CHECK(thrown_code([] {
          expand_sum(build_F_r(1), CRingCtx{}, 1);
        }) == errc::non_kappa_content);
  CHECK(thrown_code([] {
          expand_sum(build_F_r(1), SymbolicCtx{}, 1);
        }) == errc::domain_error);
  CHECK(thrown_code([] { expand_sum(build_F_r(1), PointCtx{}, 1); }) ==
        errc::domain_error);
}

TEST_CASE("plethystic exponential domain") {
  SymbolicSum empty{2, {}};
  const auto one = pexp_eval(empty, PointCtx{}, 3);
  CHECK(one.coeff(QKey{0, 0}) == 1);
  CHECK(one.coeffs().size() == 1);

  BracketTerm constant;
  constant.lead_q = QKey{0};
  SymbolicSum bad{1, {constant}};
  CHECK(thrown_code([&] { pexp_eval(bad, PointCtx{}, 3); }) == errc::exp_domain);
}

TEST_CASE("moebius values") {
  const auto mu = mobius_table(12);
  CHECK(mu[1] == 1);
  CHECK(mu[2] == -1);
  CHECK(mu[3] == -1);
  CHECK(mu[4] == 0);
  CHECK(mu[6] == 1);
  CHECK(mu[10] == 1);
  CHECK(mu[12] == 0);
}

TEST_CASE("plethystic log undoes the exponential") {
  // S = 2q + 3q^2 with rational coefficients (no equivariant content, so the
  // level-n family members coincide).
  QSeries<Rational> arg(1, 6);
  for (int n = 1; n <= 6; ++n) {
    arg.add_to(QKey{n}, Rational(2) / n);
    if (2 * n <= 6) arg.add_to(QKey{2 * n}, Rational(3) / n);
  }
  const QSeries<Rational> Z = exp_series(arg);
  const auto S = plog<Rational>([&](int) { return Z; }, 1, 6);
  QSeries<Rational> want(1, 6);
  want.add_to(QKey{1}, 2);
  want.add_to(QKey{2}, 3);
  CHECK(S == want);

  QSeries<Rational> one(1, 4);
  one.add_to(QKey{0}, 1);
  CHECK(plog<Rational>([&](int) { return one; }, 1, 4).is_zero());
}

TEST_CASE("flip only touches the q0 grading") {
  QSeries<Rational> f(2, 3);
  f.add_to(QKey{1, 0}, 5);
  f.add_to(QKey{2, 1}, 7);
  f.add_to(QKey{0, 1}, 9);
  const auto g = flip_q0(f);
  CHECK(g.coeff(QKey{1, 0}) == -5);
  CHECK(g.coeff(QKey{2, 1}) == 7);
  CHECK(g.coeff(QKey{0, 1}) == 9);
}

TEST_CASE("complete homogeneous powers") {
  const ExponentVec x{2, 0, 0}, y{0, 2, 0};
  CHECK(hsym({x, y}, 0).is_one());
  CHECK(hsym({}, 0).is_one());
  CHECK(hsym({}, 2).is_zero());
  CHECK(hsym({x}, 3) == LaurentPoly::monomial({6, 0, 0}));
  const LaurentPoly h2 = hsym({x, y}, 2);
  CHECK(h2.coeff(ExponentVec{4, 0, 0}) == 1);
  CHECK(h2.coeff(ExponentVec{2, 2, 0}) == 1);
  CHECK(h2.coeff(ExponentVec{0, 4, 0}) == 1);
  CHECK(h2.term_count() == 3);
}

TEST_CASE("direct exponential matches the series route") {
  const auto I = realized_colors(1, 3);
  MonomialAssignment asg;
  asg[{1}] = {ExponentVec{2, 0, 0}};
  asg[{2}] = {ExponentVec{0, 2, 0}};
  asg[{3}] = {};
  const auto direct = pexp_direct(asg, I, 3);
  // PExp(x q + y q^2) = 1/((1 - x q)(1 - y q^2)).
  CHECK(direct.coeff(QKey{1}) == LaurentPoly::monomial({2, 0, 0}));
  LaurentPoly q3 = LaurentPoly::monomial({6, 0, 0});
  q3 += LaurentPoly::monomial({2, 2, 0});
  CHECK(direct.coeff(QKey{3}) == q3);
  CHECK(direct == pexp_symbolic(assignment_sum(asg, 1), 3));

  MonomialAssignment missing;
  missing[{1}] = {ExponentVec{2, 0, 0}};
  CHECK(thrown_code([&] { pexp_direct(missing, I, 3); }) == errc::domain_error);
}

TEST_CASE("rigidity coefficients are point independent") {
  const auto parts = colored_partitions(2, 2);
  const RationalPoint p1{Rational(2), Rational(3), Rational(5)};
  const RationalPoint p2{Rational(4), Rational(3), Rational(5, 2)};
  const auto [a, b] = rigidity_h(parts, 2, 2, {1, 0}, p1, p2);
  CHECK(a == Rational(-1));
  CHECK(b == Rational(-1));

  const RationalPoint p3{Rational(2), Rational(3), Rational(7)};
  CHECK(thrown_code([&] { rigidity_h(parts, 2, 2, {1, 0}, p1, p3); }) ==
        errc::domain_error);
}
