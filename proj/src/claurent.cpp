#include "orbidt/claurent.hpp"

#include <sstream>
#include <vector>

namespace orbidt {

CPoly CPoly::constant(const Rational& a) { return monomial(0, a); }

CPoly CPoly::monomial(int k, const Rational& a) {
  CPoly p;
  p.add_term(k, a);
  return p;
}

bool CPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational CPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CPoly::min_exp() const {
  if (terms_.empty()) fail(errc::domain_error, "min_exp of zero");
  return terms_.begin()->first;
}

int CPoly::max_exp() const {
  if (terms_.empty()) fail(errc::domain_error, "max_exp of zero");
  return terms_.rbegin()->first;
}

void CPoly::add_term(int k, const Rational& a) {
  if (a == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, a);
  if (!fresh) {
    it->second += a;
    if (it->second == 0) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [k, a] : o.terms_) add_term(k, a);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [k, a] : o.terms_) add_term(k, -a);
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
  CPoly out;
  for (const auto& [ka, a] : terms_)
    for (const auto& [kb, b] : o.terms_) out.add_term(ka + kb, a * b);
  terms_.swap(out.terms_);
  return *this;
}

CPoly& CPoly::operator*=(const Rational& a) {
  if (a == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= a;
  return *this;
}

std::optional<CPoly> CPoly::divide_exact(const CPoly& d) const {
  if (d.is_zero()) fail(errc::division_by_zero, "division by zero CPoly");
  if (is_zero()) return CPoly();
  // Shift both factors to honest polynomials with nonzero constant term; the
  // c-power offset nlo - dlo is reattached to the quotient afterwards.
  const int nlo = min_exp(), dlo = d.min_exp();
  const int degN = max_exp() - nlo, degD = d.max_exp() - dlo;
  if (degN < degD) return std::nullopt;
  std::vector<Rational> N(degN + 1), D(degD + 1);
  for (const auto& [k, a] : terms_) N[k - nlo] = a;
  for (const auto& [k, a] : d.terms_) D[k - dlo] = a;
  std::vector<Rational> Q(degN - degD + 1);
  for (int i = degN; i >= degD; --i) {
    if (N[i] == 0) continue;
    Rational f = N[i] / D[degD];
    Q[i - degD] = f;
    for (int j = 0; j <= degD; ++j) N[i - degD + j] -= f * D[j];
  }
  for (int i = 0; i < degD; ++i)
    if (N[i] != 0) return std::nullopt;
  CPoly quot;
  for (int i = 0; i < (int)Q.size(); ++i) quot.add_term(i + nlo - dlo, Q[i]);
  return quot;
}

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << a.get_str();
    if (k != 0) os << "*c^" << k;
  }
  return os.str();
}

CRational::CRational(CPoly n, CPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail(errc::division_by_zero, "CRational with zero denominator");
  normalize();
}

CRational& CRational::operator*=(const CRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

CRational& CRational::operator+=(const CRational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

bool CRational::operator==(const CRational& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

void CRational::normalize() {
  if (num_.is_zero()) {
    den_ = CPoly::one();
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = CPoly::one();
  }
  // Shift c powers so the denominator starts at c^0, and make its leading
  // coefficient positive.
  int shift = den_.min_exp();
  if (shift != 0) {
    num_ *= CPoly::monomial(-shift);
    den_ *= CPoly::monomial(-shift);
  }
  if (den_.terms().rbegin()->second < 0) {
    num_ *= Rational(-1);
    den_ *= Rational(-1);
  }
}

std::string CRational::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace orbidt
