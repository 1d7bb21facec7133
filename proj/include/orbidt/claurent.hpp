#ifndef ORBIDT_CLAURENT_HPP
#define ORBIDT_CLAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "orbidt/rational.hpp"

namespace orbidt {

// Univariate Laurent polynomial in c = (t1 t2 t3)^(1/2) with exact rational
// coefficients.  This is the ring where the rigid limit of the equivariant
// series lives.
class CPoly {
 public:
  using TermMap = std::map<int, Rational>;

  CPoly() = default;

  static CPoly constant(const Rational& a);
  static CPoly monomial(int k, const Rational& a = 1);
  static CPoly one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  Rational coeff(int k) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  void add_term(int k, const Rational& a);

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly& operator*=(const Rational& a);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
  friend CPoly operator*(CPoly a, const Rational& s) { return a *= s; }
  bool operator==(const CPoly& o) const = default;

  // Exact quotient *this / d when the division leaves no remainder.
  std::optional<CPoly> divide_exact(const CPoly& d) const;

  std::string str() const;

 private:
  TermMap terms_;
};

// Fraction of two CPoly values.  Equality is by cross-multiplication; no gcd
// is ever computed.  normalize() only shifts c powers, fixes the sign of the
// leading denominator coefficient and attempts exact divisions.
class CRational {
 public:
  CRational() : num_(), den_(CPoly::one()) {}
  explicit CRational(CPoly n) : num_(std::move(n)), den_(CPoly::one()) {}
  CRational(CPoly n, CPoly d);

  static CRational one() { return CRational(CPoly::one()); }

  const CPoly& num() const { return num_; }
  const CPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  CRational& operator*=(const CRational& o);
  CRational& operator+=(const CRational& o);
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
  friend CRational operator+(CRational a, const CRational& b) { return a += b; }

  bool operator==(const CRational& o) const;

  void normalize();

  std::string str() const;

 private:
  CPoly num_, den_;
};

}  // namespace orbidt

#endif
