#ifndef ORBIDT_LAURENT_HPP
#define ORBIDT_LAURENT_HPP

#include <map>
#include <optional>
#include <vector>

#include "orbidt/rational.hpp"

namespace orbidt {

// Exponent vectors store DOUBLED exponents so half-integer powers stay exact:
// entry d on variable v stands for v^(d/2).  Variable order is t1, t2, t3
// followed by the box-counting variables q0..q_{r-1} when present, so the
// arity is 3 for purely equivariant data and 3+r otherwise.
using ExponentVec = std::vector<int>;

ExponentVec exp_mul(const ExponentVec& a, const ExponentVec& b);
ExponentVec exp_inv(const ExponentVec& a);
ExponentVec exp_pow(const ExponentVec& a, int n);
bool exp_is_trivial(const ExponentVec& a);
// True when every doubled entry is even, i.e. the monomial has integer exponents.
bool exp_is_integral(const ExponentVec& a);

// kappa = t1*t2*t3 as a doubled exponent vector of the given arity.
ExponentVec kappa_exp(int arity);
// kappa / m.
ExponentVec kappa_over(const ExponentVec& m);

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept in lexicographic key order with no explicit zeros, so
// equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVec, Rational>;

  LaurentPoly() : arity_(3) {}
  explicit LaurentPoly(int arity);

  static LaurentPoly constant(int arity, const Rational& c);
  static LaurentPoly monomial(const ExponentVec& e, const Rational& c = 1);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const ExponentVec& e) const;

  void add_term(const ExponentVec& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  bool operator==(const LaurentPoly& o) const = default;

  std::string str() const;

 private:
  int arity_;
  TermMap terms_;
};

// [m] = m^(1/2) - m^(-1/2).  Requires m nontrivial with integer exponents
// (doubled entries even); throws errc::zero_weight / errc::domain_error.
LaurentPoly bracket(const ExponentVec& m);

// Exponent-scaling (Adams) operation p(v) -> p(v^n), n >= 1.
LaurentPoly adams(const LaurentPoly& p, int n);

// v -> v^(-1) on every variable.
LaurentPoly dual(const LaurentPoly& p);

// Evaluation point: exact square roots s_i of the t_i, all nonzero.
struct RationalPoint {
  Rational s1, s2, s3;
  RationalPoint power(int n) const;  // s_i -> s_i^n
  bool operator==(const RationalPoint&) const = default;
};

// Value of a monomial at pt: prod s_i^{d_i} * prod q_j^{d_j/2}.  The q part,
// if present, needs q_values and integer exponents.
Rational evaluate_monomial(const ExponentVec& e, const RationalPoint& pt,
                           const std::vector<Rational>* q_values = nullptr);

Rational evaluate(const LaurentPoly& p, const RationalPoint& pt,
                  const std::vector<Rational>* q_values = nullptr);

// Value of [m] at pt for a t-monomial m with integer exponents.  Throws
// errc::bracket_vanishes when the value is zero.
Rational bracket_value(const ExponentVec& m, const RationalPoint& pt);

}  // namespace orbidt

#endif
