#include "orbidt/selfcheck.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "orbidt/pleth.hpp"
#include "orbidt/points.hpp"
#include "orbidt/transfer.hpp"

namespace orbidt {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
  std::mt19937_64 rng;
  int jobs;
};

CriterionResult timed(const std::string& id, Ctx& ctx,
                      bool (*body)(Ctx&, std::string&)) {
  CriterionResult res{id, false, "", 0.0};
  const auto t0 = Clock::now();
  try {
    res.pass = body(ctx, res.detail);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

// A1: brute-force localization equals PExp(F_r + F_col) at seeded points.
bool a1(Ctx& ctx, std::string& detail) {
  std::ostringstream log;
  bool ok = true;
  const std::pair<int, int> cases[] = {{1, 8}, {2, 7}, {3, 6}};
  for (const auto& [r, N] : cases) {
    const auto parts = colored_partitions(r, N);
    const auto I = realized_colors(r, N);
    const SymbolicSum S = concat(build_F_r(r), build_F_col(r));
    int equal = 0, supported = 0;
    for (int k = 0; k < 3; ++k) {
      const auto [zE, zP] = with_generic_point(ctx.rng, [&](const RationalPoint& pt) {
        return std::pair{z_enumerated_point(parts, r, N, pt, ctx.jobs),
                         pexp_point(S, pt, N)};
      });
      if (zE == zP) ++equal;
      if (restrict_to(zE, I) == zE && restrict_to(zP, I) == zP) ++supported;
    }
    ok = ok && equal == 3 && supported == 3;
    log << "r=" << r << " N=" << N << " equal=" << equal << "/3 in-I="
        << supported << "/3; ";
  }
  detail = log.str();
  return ok;
}

// A2: ahat degenerates to (-c)^index for every partition.
bool a2(Ctx& ctx, std::string& detail) {
  (void)ctx;
  int checked = 0;
  for (int r = 1; r <= 3; ++r) {
    for (const auto& pp : plane_partitions_up_to(7)) {
      const int idx = index_of(pp, r);
      const CRational expected(
          CPoly::monomial(idx, idx % 2 == 0 ? 1 : -1));
      if (!(ahat_limit(partition_weights(pp, r)) == expected)) {
        detail = "limit law fails at r=" + std::to_string(r) +
                 " |pi|=" + std::to_string(pp.size());
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " fixed points";
  return true;
}

// A3: transfer word = index enumeration = PExp(F_limit) in the c ring.
bool a3(Ctx& ctx, std::string& detail) {
  std::ostringstream log;
  for (int r = 1; r <= 3; ++r) {
    const int N = 7;
    const auto parts = colored_partitions(r, N);
    const QSeries<CRational> zT = z_limit(r, N);
    const QSeries<CPoly> zI = z_index_limit(parts, r, N);
    const QSeries<CPoly> zF = pexp_cring(build_F_limit(r), N);
    if (!(zT == to_crational(zI)) || !(zI == zF)) {
      detail = "three-way mismatch at r=" + std::to_string(r);
      return false;
    }
    if (!(z_enumerated_limit(parts, r, N, ctx.jobs) == zT)) {
      detail = "classification route disagrees at r=" + std::to_string(r);
      return false;
    }
    log << "r=" << r << " ok; ";
  }
  detail = log.str();
  return true;
}

// A4: signed box counting equals the flipped PExp of Young's function.
bool a4(Ctx& ctx, std::string& detail) {
  (void)ctx;
  for (int r = 2; r <= 3; ++r) {
    const int N = 8;
    const auto parts = colored_partitions(r, N);
    const QSeries<Rational> zS = z_signed_count(parts, r, N);
    const QSeries<Rational> zF =
        flip_q0(pexp_eval(build_F_num(r), PointCtx{}, N));
    if (!(zS == zF)) {
      detail = "numerical series mismatch at r=" + std::to_string(r);
      return false;
    }
  }
  detail = "r=2,3 to order 8";
  return true;
}

// A5: rigidity -- h depends on kappa only; h_(1,0) = -1.
bool a5(Ctx& ctx, std::string& detail) {
  const int r = 2, N = 6;
  const auto parts = colored_partitions(r, N);
  const std::pair<RationalPoint, RationalPoint> pairs[] = {
      {{2, 3, 5}, {4, 3, Rational(5) / 2}},
      {{Rational(3) / 2, 2, 7}, {3, 2, Rational(7) / 2}},
  };
  bool first_pair = true;
  for (const auto& [p1, p2] : pairs) {
    if (p1.s1 * p1.s2 * p1.s3 != p2.s1 * p2.s2 * p2.s3) {
      detail = "test points not kappa-matched";
      return false;
    }
    const QSeries<Rational> h1 = rigidity_h_series(parts, r, N, p1, ctx.jobs);
    const QSeries<Rational> h2 = rigidity_h_series(parts, r, N, p2, ctx.jobs);
    if (!(h1 == h2)) {
      detail = "h series differ within a kappa-matched pair";
      return false;
    }
    if (first_pair && h1.coeff(ColorVector{1, 0}) != -1) {
      detail = "h_(1,0) != -1";
      return false;
    }
    first_pair = false;
  }
  detail = "2 kappa-matched pairs, all |alpha| <= 6; h_(1,0) = -1";
  return true;
}

// A6: virtual-tangent duality, no constant term, exact pairing round trip.
bool a6(Ctx& ctx, std::string& detail) {
  (void)ctx;
  int checked = 0;
  const int arity = 3;
  for (int r = 1; r <= 3; ++r) {
    for (const auto& pp : plane_partitions_up_to(7)) {
      const LaurentPoly T = invariant_part(virtual_tangent(pp), r);
      if (T.coeff(ExponentVec(arity, 0)) != 0) {
        detail = "nonzero constant term";
        return false;
      }
      for (const auto& [e, c] : T.terms()) {
        if (T.coeff(kappa_over(e)) != -c) {
          detail = "duality violated at r=" + std::to_string(r);
          return false;
        }
      }
      const WeightList W = pair_weights(T);
      LaurentPoly back(arity);
      for (const auto& w : W) {
        back.add_term(w, 1);
        back.add_term(kappa_over(w), -1);
      }
      if (!(back == T)) {
        detail = "pairing round trip failed";
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " tangents";
  return true;
}

ExponentVec random_monomial(std::mt19937_64& rng) {
  ExponentVec e(3);
  for (int i = 0; i < 3; ++i) e[i] = 2 * ((int)(rng() % 5) - 2);
  return e;
}

MonomialAssignment random_assignment(std::mt19937_64& rng,
                                     const IndexSemigroup& I, int N) {
  MonomialAssignment asg;
  for (const auto& alpha : I.realized) {
    int total = 0;
    for (int v : alpha) total += v;
    if (total < 1 || total > N) continue;
    std::vector<ExponentVec> monos(1 + rng() % 3);
    for (auto& m : monos) m = random_monomial(rng);
    asg[alpha] = std::move(monos);
  }
  return asg;
}

// A7: PExp calculus -- direct vs evaluated, multiplicativity, plog round trip.
bool a7(Ctx& ctx, std::string& detail) {
  const int r = 2;
  const auto I5 = realized_colors(r, 5);
  for (int k = 0; k < 20; ++k) {
    const MonomialAssignment asg = random_assignment(ctx.rng, I5, 5);
    const QSeries<LaurentPoly> direct = pexp_direct(asg, I5, 5);
    const QSeries<LaurentPoly> eval =
        pexp_symbolic(assignment_sum(asg, r), 5);
    if (!(direct == eval)) {
      detail = "pexp_direct != pexp_eval at assignment " + std::to_string(k);
      return false;
    }
  }
  {
    const SymbolicSum S1 = assignment_sum(random_assignment(ctx.rng, I5, 5), r);
    const SymbolicSum S2 = assignment_sum(random_assignment(ctx.rng, I5, 5), r);
    const QSeries<LaurentPoly> lhs = pexp_symbolic(concat(S1, S2), 5);
    const QSeries<LaurentPoly> rhs =
        pexp_symbolic(S1, 5) * pexp_symbolic(S2, 5);
    if (!(lhs == rhs)) {
      detail = "pexp not multiplicative";
      return false;
    }
  }
  {
    const auto I6 = realized_colors(r, 6);
    const SymbolicSum S = assignment_sum(random_assignment(ctx.rng, I6, 6), r);
    auto family = [&](int n) {
      return pexp_symbolic(adams_t_only(S, n), 6);
    };
    const QSeries<LaurentPoly> back = plog<LaurentPoly>(family, r, 6);
    if (!(back == expand_sum(S, SymbolicCtx{}, 6))) {
      detail = "plog round trip failed";
      return false;
    }
  }
  detail = "20 assignments; multiplicativity; plog round trip";
  return true;
}

// A8: operator exchange identities at truncation degree 4.
bool a8(Ctx& ctx, std::string& detail) {
  (void)ctx;
  const GammaArg a{QKey{1, 0}, 0}, b{QKey{0, 1}, 0};
  if (!check_gamma_commutation(a, b, 4)) {
    detail = "gamma exchange failed";
    return false;
  }
  for (int r = 1; r <= 2; ++r) {
    if (!check_A_commutation(r, 4)) {
      detail = "A exchange failed at r=" + std::to_string(r);
      return false;
    }
  }
  detail = "gamma and A exchanges, degree 4, r=1,2";
  return true;
}

// A9: I is closed under addition; single non-0 colors are not realized.
bool a9(Ctx& ctx, std::string& detail) {
  (void)ctx;
  for (int r = 2; r <= 3; ++r) {
    const auto I = realized_colors(r, 8);
    for (const auto& a : I.realized) {
      int ta = 0;
      for (int v : a) ta += v;
      for (const auto& b : I.realized) {
        int tb = 0;
        for (int v : b) tb += v;
        if (ta + tb > 8) continue;
        ColorVector sum(r);
        for (int i = 0; i < r; ++i) sum[i] = a[i] + b[i];
        if (!I.contains(sum)) {
          detail = "closure violated at r=" + std::to_string(r);
          return false;
        }
      }
    }
    for (int i = 1; i < r; ++i) {
      ColorVector e(r, 0);
      e[i] = 1;
      if (I.contains(e)) {
        detail = "single non-0 color realized at r=" + std::to_string(r);
        return false;
      }
    }
  }
  detail = "r=2,3 closure within |alpha| <= 8";
  return true;
}

// A10: two independent MacMahon reproductions.
bool a10(Ctx& ctx, std::string& detail) {
  (void)ctx;
  const int N = 10;
  // prod_k (1 - q^k)^(-k) via binomial expansions of each factor.
  QSeries<Rational> g(1, N);
  g.add_to(QKey{0}, 1);
  for (int k = 1; k <= N; ++k) {
    QSeries<Rational> f(1, N);
    for (int m = 0; k * m <= N; ++m) {
      Int num = 1, den = 1;
      for (int j = 1; j <= k - 1; ++j) {
        num *= m + j;
        den *= j;
      }
      f.add_to(QKey{k * m}, Rational(num) / Rational(den));
    }
    g = g * f;
  }
  for (int n = 0; n <= N; ++n) {
    const Rational c = g.coeff(QKey{n});
    if (c != Rational((long)plane_partitions(n).size())) {
      detail = "enumeration disagrees with the product at n=" +
               std::to_string(n);
      return false;
    }
  }
  const std::vector<Int> t = transfer_plain(8);
  for (int n = 0; n <= 8; ++n) {
    if (Rational(t[n]) != g.coeff(QKey{n})) {
      detail = "plain transfer disagrees at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "product vs enumeration (n<=10) and plain transfer (n<=8)";
  return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int jobs) {
  Ctx ctx{std::mt19937_64(seed), jobs};
  std::vector<CriterionResult> out;
  out.push_back(timed("A1", ctx, a1));
  out.push_back(timed("A2", ctx, a2));
  out.push_back(timed("A3", ctx, a3));
  out.push_back(timed("A4", ctx, a4));
  out.push_back(timed("A5", ctx, a5));
  out.push_back(timed("A6", ctx, a6));
  out.push_back(timed("A7", ctx, a7));
  out.push_back(timed("A8", ctx, a8));
  out.push_back(timed("A9", ctx, a9));
  out.push_back(timed("A10", ctx, a10));
  return out;
}

}  // namespace orbidt
