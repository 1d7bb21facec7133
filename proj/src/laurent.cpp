#include "orbidt/laurent.hpp"

#include <sstream>

namespace orbidt {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) fail(errc::division_by_zero, "0 raised to a negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
  return out;  // powers of a canonical fraction stay canonical
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) fail(errc::usage, "cannot parse rational '" + s + "'");
  if (r.get_den() == 0) fail(errc::division_by_zero, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

ExponentVec exp_mul(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) fail(errc::arity_mismatch, "monomial arity mismatch");
  ExponentVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVec exp_inv(const ExponentVec& a) {
  ExponentVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

ExponentVec exp_pow(const ExponentVec& a, int n) {
  ExponentVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * n;
  return out;
}

bool exp_is_trivial(const ExponentVec& a) {
  for (int d : a)
    if (d != 0) return false;
  return true;
}

bool exp_is_integral(const ExponentVec& a) {
  for (int d : a)
    if (d % 2 != 0) return false;
  return true;
}

ExponentVec kappa_exp(int arity) {
  ExponentVec k(arity, 0);
  k[0] = k[1] = k[2] = 2;
  return k;
}

ExponentVec kappa_over(const ExponentVec& m) {
  return exp_mul(kappa_exp((int)m.size()), exp_inv(m));
}

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
  if (arity < 3) fail(errc::usage, "laurent arity must be >= 3");
}

LaurentPoly LaurentPoly::constant(int arity, const Rational& c) {
  LaurentPoly p(arity);
  p.add_term(ExponentVec(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVec& e, const Rational& c) {
  LaurentPoly p((int)e.size());
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && exp_is_trivial(terms_.begin()->first) &&
         terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(const ExponentVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& e, const Rational& c) {
  if ((int)e.size() != arity_) fail(errc::arity_mismatch, "term arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (arity_ != o.arity_) fail(errc::arity_mismatch, "polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (arity_ != o.arity_) fail(errc::arity_mismatch, "polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (arity_ != o.arity_) fail(errc::arity_mismatch, "polynomial arity mismatch");
  LaurentPoly out(arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(exp_mul(ea, eb), ca * cb);
  terms_.swap(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]/2";
  }
  return os.str();
}

LaurentPoly bracket(const ExponentVec& m) {
  if (exp_is_trivial(m)) fail(errc::zero_weight, "bracket of the trivial weight");
  if (!exp_is_integral(m))
    fail(errc::domain_error, "bracket needs integer exponents");
  ExponentVec half(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) half[i] = m[i] / 2;
  LaurentPoly p((int)m.size());
  p.add_term(half, 1);
  p.add_term(exp_inv(half), -1);
  return p;
}

LaurentPoly adams(const LaurentPoly& p, int n) {
  if (n < 1) fail(errc::usage, "adams level must be >= 1");
  LaurentPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) out.add_term(exp_pow(e, n), c);
  return out;
}

LaurentPoly dual(const LaurentPoly& p) {
  LaurentPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) out.add_term(exp_inv(e), c);
  return out;
}

RationalPoint RationalPoint::power(int n) const {
  return RationalPoint{pow_rational(s1, n), pow_rational(s2, n), pow_rational(s3, n)};
}

Rational evaluate_monomial(const ExponentVec& e, const RationalPoint& pt,
                           const std::vector<Rational>* q_values) {
  if (e.size() < 3) fail(errc::arity_mismatch, "monomial arity must be >= 3");
  Rational v = pow_rational(pt.s1, e[0]);
  v *= pow_rational(pt.s2, e[1]);
  v *= pow_rational(pt.s3, e[2]);
  for (std::size_t j = 3; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (q_values == nullptr || q_values->size() < e.size() - 3)
      fail(errc::usage, "q variable present but no q value supplied");
    if (e[j] % 2 != 0)
      fail(errc::domain_error, "cannot evaluate a half-integer q power");
    v *= pow_rational((*q_values)[j - 3], e[j] / 2);
  }
  return v;
}

Rational evaluate(const LaurentPoly& p, const RationalPoint& pt,
                  const std::vector<Rational>* q_values) {
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) acc += c * evaluate_monomial(e, pt, q_values);
  return acc;
}

Rational bracket_value(const ExponentVec& m, const RationalPoint& pt) {
  if (exp_is_trivial(m)) fail(errc::zero_weight, "bracket of the trivial weight");
  if (!exp_is_integral(m))
    fail(errc::domain_error, "bracket needs integer exponents");
  for (std::size_t j = 3; j < m.size(); ++j)
    if (m[j] != 0) fail(errc::domain_error, "bracket value of a q-dependent weight");
  ExponentVec half(m.size(), 0);
  for (int i = 0; i < 3; ++i) half[i] = m[i] / 2;
  Rational v = evaluate_monomial(half, pt);
  Rational out = v - 1 / v;
  if (out == 0) fail(errc::bracket_vanishes, "bracket vanishes at this point");
  return out;
}

}  // namespace orbidt
