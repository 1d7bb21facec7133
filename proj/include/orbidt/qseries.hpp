#ifndef ORBIDT_QSERIES_HPP
#define ORBIDT_QSERIES_HPP

#include <map>
#include <vector>

#include "orbidt/claurent.hpp"
#include "orbidt/laurent.hpp"
#include "orbidt/partitions.hpp"
#include "orbidt/rational.hpp"

namespace orbidt {

using QKey = std::vector<int>;

inline int key_total(const QKey& k) {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

// The coefficient ring interface used by QSeries: zero/one tests, a one
// element, and scaling by exact rationals.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static Rational one() { return Rational(1); }
  static void scale(Rational& a, const Rational& s) { a *= s; }
};

template <>
struct CoeffOps<CPoly> {
  static bool is_zero(const CPoly& a) { return a.is_zero(); }
  static bool is_one(const CPoly& a) { return a.is_one(); }
  static CPoly one() { return CPoly::one(); }
  static void scale(CPoly& a, const Rational& s) { a *= s; }
};

template <>
struct CoeffOps<CRational> {
  static bool is_zero(const CRational& a) { return a.is_zero(); }
  static bool is_one(const CRational& a) { return a == CRational::one(); }
  static CRational one() { return CRational::one(); }
  static void scale(CRational& a, const Rational& s) {
    a *= CRational(CPoly::constant(s));
  }
};

// Series coefficients over the equivariant variables are always arity-3
// Laurent polynomials; the q grading lives in the keys.
template <>
struct CoeffOps<LaurentPoly> {
  static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
  static bool is_one(const LaurentPoly& a) { return a.is_one(); }
  static LaurentPoly one() { return LaurentPoly::constant(3, 1); }
  static void scale(LaurentPoly& a, const Rational& s) { a *= s; }
};

// Formal series in q0..q_{width-1} truncated at total key degree <= order.
// Keys may have negative entries transiently (leading q-inverse monomials);
// final physical series have nonnegative keys, which callers assert.
template <class C>
class QSeries {
 public:
  using Map = std::map<QKey, C>;

  QSeries(int width, int order) : width_(width), order_(order) {
    if (width < 1 || order < 0) fail(errc::usage, "bad series shape");
  }

  int width() const { return width_; }
  int order() const { return order_; }
  const Map& coeffs() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }

  C coeff(const QKey& k) const {
    auto it = coef_.find(k);
    return it == coef_.end() ? C{} : it->second;
  }

  void add_to(const QKey& k, const C& v) {
    if ((int)k.size() != width_) fail(errc::arity_mismatch, "key width mismatch");
    if (key_total(k) > order_) return;
    if (CoeffOps<C>::is_zero(v)) return;
    auto [it, fresh] = coef_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (CoeffOps<C>::is_zero(it->second)) coef_.erase(it);
    }
  }

  QSeries& operator+=(const QSeries& o) {
    require_shape(o);
    for (const auto& [k, v] : o.coef_) add_to(k, v);
    return *this;
  }

  QSeries& operator-=(const QSeries& o) {
    require_shape(o);
    for (const auto& [k, v] : o.coef_) {
      C neg = v;
      CoeffOps<C>::scale(neg, Rational(-1));
      add_to(k, neg);
    }
    return *this;
  }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.require_shape(b);
    QSeries out(a.width_, a.order_);
    for (const auto& [ka, va] : a.coef_)
      for (const auto& [kb, vb] : b.coef_) {
        QKey k(a.width_);
        for (int i = 0; i < a.width_; ++i) k[i] = ka[i] + kb[i];
        if (key_total(k) > a.order_) continue;
        out.add_to(k, va * vb);
      }
    return out;
  }

  void scale(const Rational& s) {
    if (s == 0) {
      coef_.clear();
      return;
    }
    for (auto& [k, v] : coef_) CoeffOps<C>::scale(v, s);
  }

  void scale_coeff(const C& c) {
    Map out;
    for (const auto& [k, v] : coef_) {
      C prod = v * c;
      if (!CoeffOps<C>::is_zero(prod)) out.emplace(k, std::move(prod));
    }
    coef_.swap(out);
  }

  bool operator==(const QSeries& o) const {
    return width_ == o.width_ && coef_ == o.coef_;
  }

 private:
  void require_shape(const QSeries& o) const {
    if (width_ != o.width_ || order_ != o.order_)
      fail(errc::arity_mismatch, "series shape mismatch");
  }

  int width_;
  int order_;
  Map coef_;
};

// exp of a series with no constant term.
template <class C>
QSeries<C> exp_series(const QSeries<C>& f) {
  QKey zero(f.width(), 0);
  if (!CoeffOps<C>::is_zero(f.coeff(zero)))
    fail(errc::exp_domain, "exp needs zero constant term");
  QSeries<C> acc(f.width(), f.order());
  acc.add_to(zero, CoeffOps<C>::one());
  QSeries<C> pw = acc;  // f^k/k!
  for (int k = 1; k <= f.order(); ++k) {
    pw = pw * f;
    pw.scale(Rational(1) / k);
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc;
}

// log of a series with constant term one.
template <class C>
QSeries<C> log_series(const QSeries<C>& f) {
  QKey zero(f.width(), 0);
  if (!CoeffOps<C>::is_one(f.coeff(zero)))
    fail(errc::log_domain, "log needs constant term one");
  QSeries<C> u = f;
  {
    QSeries<C> one(f.width(), f.order());
    one.add_to(zero, CoeffOps<C>::one());
    u -= one;
  }
  QSeries<C> acc(f.width(), f.order());
  QSeries<C> pw = u;
  for (int k = 1; k <= f.order(); ++k) {
    QSeries<C> term = pw;
    term.scale(Rational(k % 2 == 1 ? 1 : -1) / k);
    acc += term;
    if (k < f.order()) pw = pw * u;
    if (pw.is_zero()) break;
  }
  return acc;
}

// q -> q^n on every key.
template <class C>
QSeries<C> scale_keys(const QSeries<C>& f, int n) {
  if (n < 1) fail(errc::usage, "key scale must be >= 1");
  QSeries<C> out(f.width(), f.order());
  for (const auto& [k, v] : f.coeffs()) {
    QKey kk(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) kk[i] = k[i] * n;
    out.add_to(kk, v);
  }
  return out;
}

// Zero out coefficients outside the realized-color set I.
template <class C>
QSeries<C> restrict_to(const QSeries<C>& f, const IndexSemigroup& I) {
  if (f.width() != I.r) fail(errc::arity_mismatch, "series width != r");
  if (f.order() > I.N)
    fail(errc::usage, "series order beyond I certification bound");
  QSeries<C> out(f.width(), f.order());
  for (const auto& [k, v] : f.coeffs()) {
    bool neg = false;
    for (int x : k) neg = neg || x < 0;
    if (!neg && I.contains(k)) out.add_to(k, v);
  }
  return out;
}

// Embed Laurent-in-c coefficients into the rational-function ring, for
// comparisons against limit values computed as CRational.
inline QSeries<CRational> to_crational(const QSeries<CPoly>& f) {
  QSeries<CRational> out(f.width(), f.order());
  for (const auto& [k, v] : f.coeffs()) out.add_to(k, CRational(v));
  return out;
}

}  // namespace orbidt

#endif

