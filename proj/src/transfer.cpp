#include "orbidt/transfer.hpp"

#include <numeric>

namespace orbidt {

namespace {

int size_of(const Partition2D& la) {
  return std::accumulate(la.begin(), la.end(), 0);
}

QKey unit_key(int width, int slot) {
  QKey k(width, 0);
  k[slot] = 1;
  return k;
}

QSeries<CPoly> shift_scale(const QSeries<CPoly>& f, const QKey& dk,
                           const CPoly& m) {
  QSeries<CPoly> out(f.width(), f.order());
  for (const auto& [k, v] : f.coeffs()) {
    QKey kk = k;
    for (std::size_t i = 0; i < kk.size(); ++i) kk[i] += dk[i];
    out.add_to(kk, v * m);
  }
  return out;
}

void weight_into(std::map<Partition2D, QSeries<CPoly>>& out,
                 const Partition2D& mu, const QSeries<CPoly>& amp,
                 const GammaArg& arg, int growth) {
  QKey dk(arg.shift.size(), 0);
  for (std::size_t i = 0; i < dk.size(); ++i) dk[i] = growth * arg.shift[i];
  QSeries<CPoly> w = shift_scale(amp, dk, CPoly::monomial(growth * arg.c_exp));
  if (w.is_zero()) return;
  auto [it, fresh] = out.try_emplace(mu, w);
  if (!fresh) it->second += w;
}

void prune(std::map<Partition2D, QSeries<CPoly>>& amps) {
  for (auto it = amps.begin(); it != amps.end();)
    it = it->second.is_zero() ? amps.erase(it) : std::next(it);
}

}  // namespace

StateVector vacuum_state(int width, int order, int max_size,
                         const Partition2D& la) {
  StateVector st{width, order, max_size, {}};
  QSeries<CPoly> one(width, order);
  one.add_to(QKey(width, 0), CPoly::one());
  st.amps.emplace(la, std::move(one));
  return st;
}

void apply_gamma_minus(StateVector& st, const GammaArg& arg) {
  if (arg.zero) return;
  std::map<Partition2D, QSeries<CPoly>> out;
  for (const auto& [la, amp] : st.amps) {
    const int len = (int)la.size();
    const int budget = st.max_size - size_of(la);
    Partition2D mu(len + 1, 0);
    // Rows mu_1 .. mu_(len+1) with mu_i in [la_i, la_(i-1)], total growth
    // bounded by the state-size cap.
    auto rec = [&](auto&& self, int i, int used) -> void {
      if (i == len + 1) {
        const int hi = std::min(len > 0 ? la[len - 1] : 0, budget - used);
        for (int v = 0; v <= hi; ++v) {
          mu[len] = v;
          Partition2D m(mu.begin(), mu.begin() + (v > 0 ? len + 1 : len));
          weight_into(out, m, amp, arg, used + v);
        }
        return;
      }
      const int lo = la[i - 1];
      const int hi =
          i == 1 ? lo + (budget - used) : std::min(la[i - 2], lo + budget - used);
      for (int v = lo; v <= hi; ++v) {
        mu[i - 1] = v;
        self(self, i + 1, used + (v - lo));
      }
    };
    if (len == 0) {
      for (int v = 0; v <= budget; ++v) {
        Partition2D m = v > 0 ? Partition2D{v} : Partition2D{};
        weight_into(out, m, amp, arg, v);
      }
    } else {
      rec(rec, 1, 0);
    }
  }
  prune(out);
  st.amps.swap(out);
}

void apply_gamma_plus(StateVector& st, const GammaArg& arg) {
  if (arg.zero) return;
  std::map<Partition2D, QSeries<CPoly>> out;
  for (const auto& [la, amp] : st.amps) {
    const int len = (int)la.size();
    Partition2D mu(len, 0);
    auto rec = [&](auto&& self, int i, int shrunk) -> void {
      if (i > len) {
        Partition2D m = mu;
        while (!m.empty() && m.back() == 0) m.pop_back();
        weight_into(out, m, amp, arg, shrunk);
        return;
      }
      const int lo = i < len ? la[i] : 0;
      for (int v = lo; v <= la[i - 1]; ++v) {
        mu[i - 1] = v;
        self(self, i + 1, shrunk + (la[i - 1] - v));
      }
    };
    rec(rec, 1, 0);
  }
  prune(out);
  st.amps.swap(out);
}

void apply_diag(StateVector& st, const QKey& per_box, int c_exp) {
  std::map<Partition2D, QSeries<CPoly>> out;
  for (const auto& [la, amp] : st.amps) {
    const int n = size_of(la);
    QKey dk(per_box.size(), 0);
    for (std::size_t i = 0; i < dk.size(); ++i) dk[i] = n * per_box[i];
    QSeries<CPoly> w = shift_scale(amp, dk, CPoly::monomial(n * c_exp));
    if (!w.is_zero()) out.emplace(la, std::move(w));
  }
  st.amps.swap(out);
}

QSeries<CPoly> vacuum_amplitude(const StateVector& st) {
  auto it = st.amps.find(Partition2D{});
  return it == st.amps.end() ? QSeries<CPoly>(st.width, st.order) : it->second;
}

namespace {

QSeries<CPoly> run_word(int r, int N, bool with_k) {
  StateVector st = vacuum_state(r, N, N);
  const GammaArg one{QKey(r, 0), 0};
  for (int m = 0; m < N; ++m) {
    apply_diag(st, unit_key(r, 0), with_k ? -1 : 0);
    for (int i = r - 1; i >= 1; --i) {
      apply_gamma_minus(st, one);
      apply_diag(st, unit_key(r, i), 0);
    }
    apply_gamma_minus(st, one);
  }
  for (int m = 0; m < N; ++m) {
    apply_diag(st, unit_key(r, 0), with_k ? +1 : 0);
    for (int i = r - 1; i >= 1; --i) {
      apply_gamma_plus(st, one);
      apply_diag(st, unit_key(r, i), 0);
    }
    apply_gamma_plus(st, one);
  }
  return vacuum_amplitude(st);
}

}  // namespace

QSeries<CRational> z_limit(int r, int N) {
  return to_crational(run_word(r, N, true));
}

std::vector<Int> transfer_plain(int N) {
  const QSeries<CPoly> z = run_word(1, N, false);
  std::vector<Int> counts(N + 1);
  for (int n = 0; n <= N; ++n) {
    const Rational c = z.coeff(QKey{n}).coeff(0);
    counts[n] = c.get_num();
  }
  return counts;
}

namespace {

// 1/(1 - m) as a key-graded geometric series for a composite monomial.
QSeries<CPoly> geometric(int width, int order, const QKey& shift, int c_exp) {
  QSeries<CPoly> g(width, order);
  const int step = key_total(shift);
  if (step <= 0) fail(errc::usage, "geometric factor needs ascending key degree");
  g.add_to(QKey(width, 0), CPoly::one());
  for (int k = 1; step * k <= order; ++k) {
    QKey kk(width, 0);
    for (int i = 0; i < width; ++i) kk[i] = k * shift[i];
    g.add_to(kk, CPoly::monomial(k * c_exp));
  }
  return g;
}

bool states_equal(const StateVector& a, const StateVector& b) {
  return a.amps == b.amps;
}

QSeries<CPoly> filter_xy(const QSeries<CPoly>& f, int r, int d) {
  QSeries<CPoly> out(f.width(), f.order());
  for (const auto& [k, v] : f.coeffs())
    if (k[r] + k[r + 1] <= d) out.add_to(k, v);
  return out;
}

}  // namespace

bool check_gamma_commutation(const GammaArg& a, const GammaArg& b, int N) {
  if (a.shift.size() != b.shift.size())
    fail(errc::arity_mismatch, "argument width mismatch");
  const int width = (int)a.shift.size();
  for (int n = 0; n <= N; ++n) {
    for (const auto& la : partitions2d(n)) {
      const int cap = n + N;
      StateVector lhs = vacuum_state(width, N, cap, la);
      apply_gamma_minus(lhs, b);
      apply_gamma_plus(lhs, a);

      StateVector rhs = vacuum_state(width, N, cap, la);
      apply_gamma_plus(rhs, a);
      apply_gamma_minus(rhs, b);
      if (!a.zero && !b.zero) {
        QKey ab(width, 0);
        for (int i = 0; i < width; ++i) ab[i] = a.shift[i] + b.shift[i];
        const QSeries<CPoly> g = geometric(width, N, ab, a.c_exp + b.c_exp);
        for (auto& [mu, amp] : rhs.amps) amp = amp * g;
      }
      if (!states_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

bool check_A_commutation(int r, int N, int basis_max) {
  const int width = r + 2;
  const int order = N * (1 + r);
  const int cap = basis_max + N;

  std::vector<GammaArg> plus_args, minus_args;
  for (int i = 0; i < r; ++i) {
    GammaArg a{QKey(width, 0), 1};
    a.shift[r] = 1;
    for (int l = 0; l <= i; ++l) a.shift[l] = 1;
    plus_args.push_back(std::move(a));
  }
  for (int j = 0; j < r; ++j) {
    GammaArg b{QKey(width, 0), 0};
    b.shift[r + 1] = 1;
    for (int l = j + 1; l < r; ++l) b.shift[l] = 1;
    minus_args.push_back(std::move(b));
  }

  QSeries<CPoly> c_factor(width, order);
  c_factor.add_to(QKey(width, 0), CPoly::one());
  for (const auto& a : plus_args)
    for (const auto& b : minus_args) {
      QKey ab(width, 0);
      for (int i = 0; i < width; ++i) ab[i] = a.shift[i] + b.shift[i];
      c_factor = c_factor * geometric(width, order, ab, a.c_exp + b.c_exp);
    }

  for (int n = 0; n <= basis_max; ++n) {
    for (const auto& la : partitions2d(n)) {
      StateVector lhs = vacuum_state(width, order, cap, la);
      for (const auto& b : minus_args) apply_gamma_minus(lhs, b);
      for (const auto& a : plus_args) apply_gamma_plus(lhs, a);

      StateVector rhs = vacuum_state(width, order, cap, la);
      for (const auto& a : plus_args) apply_gamma_plus(rhs, a);
      for (const auto& b : minus_args) apply_gamma_minus(rhs, b);
      for (auto& [mu, amp] : rhs.amps) amp = amp * c_factor;

      std::map<Partition2D, QSeries<CPoly>> lf, rf;
      for (const auto& [mu, amp] : lhs.amps) {
        QSeries<CPoly> f = filter_xy(amp, r, N);
        if (!f.is_zero()) lf.emplace(mu, std::move(f));
      }
      for (const auto& [mu, amp] : rhs.amps) {
        QSeries<CPoly> f = filter_xy(amp, r, N);
        if (!f.is_zero()) rf.emplace(mu, std::move(f));
      }
      if (lf != rf) return false;
    }
  }
  return true;
}

}  // namespace orbidt
