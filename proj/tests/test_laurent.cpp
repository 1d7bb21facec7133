#include <doctest.h>

#include "helpers.hpp"
#include "orbidt/laurent.hpp"

using namespace orbidt;
using orbidt::testing::thrown_code;

namespace {
const ExponentVec T1{2, 0, 0}, T2{0, 2, 0}, T3{0, 0, 2};
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(rational_str(Rational(6, 4)) == "3/2");
  CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("exponent helpers") {
  CHECK(exp_mul(T1, T2) == ExponentVec{2, 2, 0});
  CHECK(exp_inv(T1) == ExponentVec{-2, 0, 0});
  CHECK(exp_pow(T2, 3) == ExponentVec{0, 6, 0});
  CHECK(exp_is_trivial(ExponentVec{0, 0, 0}));
  CHECK(!exp_is_trivial(T3));
  CHECK(exp_is_integral(T1));
  CHECK(!exp_is_integral(ExponentVec{1, 0, 0}));
  CHECK(kappa_exp(3) == ExponentVec{2, 2, 2});
  CHECK(kappa_over(T1) == ExponentVec{0, 2, 2});
}

TEST_CASE("laurent algebra is structural") {
  LaurentPoly a = LaurentPoly::monomial(T1) + LaurentPoly::constant(3, 1);
  LaurentPoly sq = a * a;
  CHECK(sq.coeff(ExponentVec{4, 0, 0}) == 1);
  CHECK(sq.coeff(T1) == 2);
  CHECK(sq.coeff(ExponentVec{0, 0, 0}) == 1);
  CHECK(sq.term_count() == 3);

  LaurentPoly z = a - a;
  CHECK(z.is_zero());
  CHECK(z == LaurentPoly(3));

  LaurentPoly c = LaurentPoly::constant(3, Rational(1));
  CHECK(c.is_one());
  CHECK((a * Rational(0)).is_zero());
}

TEST_CASE("bracket expansion and antisymmetry") {
  LaurentPoly b1 = bracket(T1);
  CHECK(b1.coeff(ExponentVec{1, 0, 0}) == 1);
  CHECK(b1.coeff(ExponentVec{-1, 0, 0}) == -1);
  CHECK(b1.term_count() == 2);

  // [t1][1/t1] = -(t1 - 2 + 1/t1)
  LaurentPoly prod = b1 * bracket(exp_inv(T1));
  CHECK(prod.coeff(T1) == -1);
  CHECK(prod.coeff(ExponentVec{0, 0, 0}) == 2);
  CHECK(prod.coeff(ExponentVec{-2, 0, 0}) == -1);

  CHECK(bracket(exp_inv(T2)) == bracket(T2) * Rational(-1));
  CHECK(thrown_code([] { bracket(ExponentVec{0, 0, 0}); }) == errc::zero_weight);
  CHECK(thrown_code([] { bracket(ExponentVec{1, 0, 0}); }) == errc::domain_error);
}

TEST_CASE("dual is an involution and negates brackets") {
  LaurentPoly p = bracket(T1) * bracket(exp_mul(T2, T3)) +
                  LaurentPoly::monomial(ExponentVec{2, -2, 4}, Rational(7, 3));
  CHECK(dual(dual(p)) == p);
  CHECK(dual(bracket(exp_mul(T1, T2))) == bracket(exp_mul(T1, T2)) * Rational(-1));
}

TEST_CASE("adams composes") {
  LaurentPoly p = LaurentPoly::monomial(T1) +
                  LaurentPoly::monomial(exp_mul(T2, T3), Rational(5));
  CHECK(adams(p, 1) == p);
  CHECK(adams(p, 2).coeff(ExponentVec{4, 0, 0}) == 1);
  CHECK(adams(adams(p, 2), 3) == adams(p, 6));
}

TEST_CASE("evaluation at exact points") {
  const RationalPoint pt{Rational(2), Rational(5, 7), Rational(3, 11)};
  // t1 = s1^2, so [t1] = s1 - 1/s1.
  CHECK(bracket_value(T1, pt) == Rational(3, 2));
  // kappa^(1/2) = s1 s2 s3
  CHECK(evaluate_monomial(ExponentVec{1, 1, 1}, pt) == Rational(30, 77));
  CHECK(evaluate_monomial(kappa_exp(3), pt) ==
        Rational(30, 77) * Rational(30, 77));

  LaurentPoly p = bracket(T1) + bracket(exp_mul(T2, T3));
  LaurentPoly q = bracket(exp_inv(T3)) * LaurentPoly::monomial(T2);
  CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));

  const RationalPoint unit{Rational(1), Rational(4), Rational(9)};
  CHECK(thrown_code([&] { bracket_value(T1, unit); }) == errc::bracket_vanishes);
}

TEST_CASE("evaluation with box-counting variables") {
  // Arity 4: one q slot; integer q exponents only, values supplied separately.
  const RationalPoint pt{Rational(2), Rational(3), Rational(5)};
  const std::vector<Rational> qv{Rational(1, 3)};
  CHECK(evaluate_monomial(ExponentVec{0, 0, 0, 2}, pt, &qv) == Rational(1, 3));
  CHECK(evaluate_monomial(ExponentVec{2, 0, 0, -2}, pt, &qv) == Rational(12));
  CHECK(thrown_code([&] {
          evaluate_monomial(ExponentVec{0, 0, 0, 1}, pt, &qv);
        }) == errc::domain_error);
  CHECK(thrown_code([&] {
          evaluate_monomial(ExponentVec{0, 0, 0, 2}, pt, nullptr);
        }) == errc::usage);
}

TEST_CASE("power of a point") {
  const RationalPoint pt{Rational(2), Rational(5, 7), Rational(3, 11)};
  const RationalPoint p3 = pt.power(3);
  CHECK(p3.s1 == Rational(8));
  CHECK(p3.s2 == Rational(125, 343));
  // Evaluating m at pt^n agrees with evaluating the Adams transform at pt.
  LaurentPoly m = LaurentPoly::monomial(ExponentVec{2, -2, 4});
  CHECK(evaluate(m, p3) == evaluate(adams(m, 3), pt));
}
