#include "orbidt/pleth.hpp"

#include <algorithm>

namespace orbidt {

namespace {

ExponentVec doubled(const std::array<int, 3>& w) {
  return ExponentVec{2 * w[0], 2 * w[1], 2 * w[2]};
}

ExponentVec doubled_sum(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  return ExponentVec{2 * (a[0] + b[0]), 2 * (a[1] + b[1]), 2 * (a[2] + b[2])};
}

QKey ones_key(int r) { return QKey(r, 1); }

// q_[i,j] = q_i q_(i+1) ... q_j as an exponent key.
QKey interval_key(int r, int i, int j) {
  QKey k(r, 0);
  for (int l = i; l <= j; ++l) k[l] = 1;
  return k;
}

const ExponentVec kKappaHalf{1, 1, 1};
const ExponentVec kTrivial{0, 0, 0};

}  // namespace

SymbolicSum concat(SymbolicSum a, const SymbolicSum& b) {
  if (a.r != b.r) fail(errc::arity_mismatch, "cannot add sums of different width");
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

SymbolicSum adams_sum(const SymbolicSum& s, int n) {
  SymbolicSum out{s.r, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    BracketTerm a;
    a.scalar = t.scalar;
    a.lead_t = exp_pow(t.lead_t, n);
    a.lead_q = t.lead_q;
    for (int& v : a.lead_q) v *= n;
    for (const auto& m : t.num_brackets) a.num_brackets.push_back(exp_pow(m, n));
    for (const auto& m : t.den_brackets) a.den_brackets.push_back(exp_pow(m, n));
    for (const auto& p : t.pairs) {
      BracketTerm::DPair q{exp_pow(p.u, n), p.beta};
      for (int& v : q.beta) v *= n;
      a.pairs.push_back(std::move(q));
    }
    out.terms.push_back(std::move(a));
  }
  return out;
}

SymbolicSum adams_t_only(const SymbolicSum& s, int n) {
  SymbolicSum out{s.r, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    BracketTerm a = t;
    a.lead_t = exp_pow(t.lead_t, n);
    for (auto& m : a.num_brackets) m = exp_pow(m, n);
    for (auto& m : a.den_brackets) m = exp_pow(m, n);
    for (auto& p : a.pairs) p.u = exp_pow(p.u, n);
    out.terms.push_back(std::move(a));
  }
  return out;
}

int term_valuation(const BracketTerm& t) {
  int v = key_total(t.lead_q);
  for (const auto& p : t.pairs) v += std::abs(key_total(p.beta));
  return v;
}

SymbolicSum build_F(int r, const std::array<int, 3>& w1,
                    const std::array<int, 3>& w2, const std::array<int, 3>& w3) {
  for (const auto& w : {w1, w2, w3})
    if (w == std::array<int, 3>{0, 0, 0})
      fail(errc::zero_weight, "trivial chart weight");
  for (int i = 0; i < 3; ++i)
    if (w1[i] + w2[i] + w3[i] != 1)
      fail(errc::calabi_yau_violation, "chart weights do not multiply to kappa");
  BracketTerm t;
  t.lead_q = QKey(r, 0);
  t.num_brackets = {doubled_sum(w2, w3), doubled_sum(w1, w3), doubled_sum(w1, w2)};
  t.den_brackets = {doubled(w1), doubled(w2), doubled(w3)};
  t.pairs = {{kKappaHalf, ones_key(r)}};
  return SymbolicSum{r, {std::move(t)}};
}

SymbolicSum build_F_r(int r) {
  SymbolicSum out{r, {}};
  for (int k = 0; k < r; ++k) {
    out = concat(std::move(out),
                 build_F(r, {r - k, -k, 0}, {k + 1 - r, k + 1, 0}, {0, 0, 1}));
  }
  return out;
}

SymbolicSum build_F_col(int r) {
  SymbolicSum out{r, {}};
  for (int i = 1; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      for (int sign : {+1, -1}) {
        BracketTerm t;
        t.lead_q = interval_key(r, i, j);
        if (sign < 0)
          for (int& v : t.lead_q) v = -v;
        t.num_brackets = {ExponentVec{2, 2, 0}};
        t.den_brackets = {ExponentVec{0, 0, 2}};
        t.pairs = {{kKappaHalf, ones_key(r)}};
        out.terms.push_back(std::move(t));
      }
    }
  }
  return out;
}

SymbolicSum build_F_limit(int r) {
  SymbolicSum out{r, {}};
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      BracketTerm t;
      t.scalar = -1;
      t.lead_t = kKappaHalf;
      t.lead_q = interval_key(r, 0, i);
      const QKey dj = interval_key(r, 0, j);
      for (int l = 0; l < r; ++l) t.lead_q[l] -= dj[l];
      t.pairs = {{kKappaHalf, ones_key(r)}};
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

SymbolicSum build_F_num(int r) {
  SymbolicSum out{r, {}};
  {
    BracketTerm t;
    t.scalar = -r;
    t.lead_q = QKey(r, 0);
    t.pairs = {{kTrivial, ones_key(r)}};
    out.terms.push_back(std::move(t));
  }
  for (int i = 1; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      for (int sign : {+1, -1}) {
        BracketTerm t;
        t.scalar = -1;
        t.lead_q = interval_key(r, i, j);
        if (sign < 0)
          for (int& v : t.lead_q) v = -v;
        t.pairs = {{kTrivial, ones_key(r)}};
        out.terms.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::vector<int> mobius_table(int N) {
  std::vector<int> mu(N + 1, 1);
  std::vector<bool> composite(N + 1, false);
  if (N >= 0) mu[0] = 0;
  for (int p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (int m = p; m <= N; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    const long pp = (long)p * p;
    for (long m = pp; m <= N; m += pp) mu[m] = 0;
  }
  return mu;
}

LaurentPoly hsym(const std::vector<ExponentVec>& monos, int l) {
  // h over a growing multiset: H_new[d] = H_old[d] + m * H_new[d-1].
  std::vector<LaurentPoly> h(l + 1, LaurentPoly(3));
  h[0] = LaurentPoly::constant(3, 1);
  for (const auto& m : monos) {
    const LaurentPoly mono = LaurentPoly::monomial(m);
    for (int d = 1; d <= l; ++d) h[d] += h[d - 1] * mono;
  }
  return h[l];
}

QSeries<LaurentPoly> pexp_direct(const MonomialAssignment& asg,
                                 const IndexSemigroup& I, int N) {
  QSeries<LaurentPoly> out(I.r, N);
  out.add_to(QKey(I.r, 0), LaurentPoly::constant(3, 1));
  for (const auto& alpha : I.realized) {
    int total = 0;
    for (int v : alpha) total += v;
    if (total < 1 || total > N) continue;
    LaurentPoly coeff(3);
    for (const auto& parts : I_partitions(alpha, I)) {
      LaurentPoly prod = LaurentPoly::constant(3, 1);
      std::size_t i = 0;
      while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        auto it = asg.find(parts[i]);
        if (it == asg.end())
          fail(errc::domain_error, "assignment missing a realized color vector");
        prod = prod * hsym(it->second, (int)(j - i));
        i = j;
      }
      coeff += prod;
    }
    out.add_to(alpha, coeff);
  }
  return out;
}

SymbolicSum assignment_sum(const MonomialAssignment& asg, int r) {
  SymbolicSum out{r, {}};
  for (const auto& [color, monos] : asg) {
    if ((int)color.size() != r)
      fail(errc::arity_mismatch, "assignment color width mismatch");
    for (const auto& m : monos) {
      BracketTerm t;
      t.lead_t = m;
      t.lead_q = color;
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

QSeries<Rational> rigidity_h_series(const std::vector<ColoredPartition>& parts,
                                    int r, int N, const RationalPoint& pt,
                                    int jobs) {
  auto family = [&](int n) {
    return z_enumerated_point(parts, r, N, pt.power(n), jobs);
  };
  QSeries<Rational> h = plog<Rational>(family, r, N);
  h -= expand_sum(build_F_r(r), PointCtx{&pt}, N);
  const Rational scale = bracket_value(ExponentVec{2, 2, 0}, pt) /
                         bracket_value(ExponentVec{0, 0, 2}, pt);
  h.scale(1 / scale);
  return h;
}

Rational rigidity_h_at(const std::vector<ColoredPartition>& parts, int r, int N,
                       const ColorVector& alpha, const RationalPoint& pt,
                       int jobs) {
  return rigidity_h_series(parts, r, N, pt, jobs).coeff(alpha);
}

std::pair<Rational, Rational> rigidity_h(const std::vector<ColoredPartition>& parts,
                                         int r, int N, const ColorVector& alpha,
                                         const RationalPoint& pt1,
                                         const RationalPoint& pt2, int jobs) {
  if (pt1.s1 * pt1.s2 * pt1.s3 != pt2.s1 * pt2.s2 * pt2.s3)
    fail(errc::domain_error, "rigidity comparison needs equal kappa");
  return {rigidity_h_at(parts, r, N, alpha, pt1, jobs),
          rigidity_h_at(parts, r, N, alpha, pt2, jobs)};
}

}  // namespace orbidt
