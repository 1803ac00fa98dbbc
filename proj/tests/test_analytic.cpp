#include <gtest/gtest.h>

#include "dlang/expr.hpp"
#include "support.hpp"

using namespace dlang;
using dlang::testing::random_local;
using dlang::testing::random_module;

namespace {

struct K {
  FieldPtr f;
  explicit K(int p = 2, int k = 1) : f(GaloisField::make(p, k)) {}
  RatFunc r(const char* s) const { return parse_ratfunc(f, s); }
  FqPoly p(const char* s) const { return r(s).num(); }
  DrinfeldModule m(const char* s) const { return DrinfeldModule(parse_twisted(f, s)); }
  Place at(const char* pi) const { return Place::finite(p(pi)); }
};

// The ball inequalities, checked directly on term valuations.
bool ball_holds(const std::vector<Valuation>& vals, long long q, Valuation m) {
  long long qn = 1;
  Valuation prev = vals[0] + m;
  for (std::size_t n = 1; n < vals.size(); ++n) {
    qn *= q;
    if (vals[n] >= kInfinity) continue;
    const Valuation term = vals[n] + qn * m;
    if (term <= prev || term <= m) return false;
    prev = term;
  }
  return true;
}

TEST(ExpLog, CarlitzCoefficients) {
  for (int p : {2, 3}) {
    K k(p);
    const auto c = DrinfeldModule::carlitz(k.f);
    const auto e = exp_coeffs(c, 3);
    const auto l = log_coeffs(c, 3);
    const RatFunc t = RatFunc::t(k.f), one = RatFunc::one(k.f);
    ASSERT_EQ(e.order(), 3);
    EXPECT_TRUE(e.coeffs[0].is_one());
    EXPECT_TRUE(l.coeffs[0].is_one());
    EXPECT_EQ(e.coeffs[1], one / (t.frobenius() - t));
    EXPECT_EQ(e.coeffs[2], one / ((t.frobenius() - t).frobenius() * (t.frobenius(2) - t)));
    EXPECT_EQ(l.coeffs[1], one / (t - t.frobenius()));
  }
}

TEST(ExpLog, InverseModTau) {
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    auto f = GaloisField::make(p, k);
    std::mt19937_64 rng(23);
    for (int it = 0; it < 6; ++it) {
      const auto m = random_module(f, rng, 2, false);
      const int N = p == 3 || k == 2 ? 4 : 6;
      const auto e = exp_coeffs(m, N), l = log_coeffs(m, N);
      const auto el = compose_truncated(e.coeffs, l.coeffs, N);
      const auto le = compose_truncated(l.coeffs, e.coeffs, N);
      for (int n = 0; n <= N; ++n) {
        EXPECT_EQ(el[n].is_one(), n == 0);
        EXPECT_EQ(el[n].is_zero(), n != 0);
        EXPECT_EQ(le[n].is_zero(), n != 0);
      }
    }
  }
}

TEST(ExpLog, LocalRecursionMatchesEmbeddedExactSeries) {
  K k(3);
  std::mt19937_64 rng(8);
  const Place v = k.at("t + 1");
  for (int it = 0; it < 5; ++it) {
    const auto m = random_module(k.f, rng, 2);
    for (auto kind : {SeriesKind::Exp, SeriesKind::Log}) {
      const auto exact = kind == SeriesKind::Exp ? exp_coeffs(m, 4) : log_coeffs(m, 4);
      const auto a = local_series(m, kind, v, 4, 20);
      const auto b = embed_series(exact, v, 20);
      for (int n = 0; n <= 4; ++n) EXPECT_GE(agreement_digits(a.coeffs[n], b.coeffs[n]), 20) << n;
    }
  }
}

TEST(Ball, CarlitzMinimalParameter) {
  K k;
  const auto c = DrinfeldModule::carlitz(k.f);
  const auto e = exp_coeffs(c, 8), l = log_coeffs(c, 8);
  for (const char* pi : {"t", "t + 1"}) {
    const Place v = k.at(pi);
    const auto b = ball(c, v, 8);
    EXPECT_EQ(ball(c, v, kDefaultTerms).min_valuation, b.min_valuation);
    std::vector<Valuation> ev, lv;
    for (const auto& x : e.coeffs) ev.push_back(valuation(v, x));
    for (const auto& x : l.coeffs) lv.push_back(valuation(v, x));
    // v(e_1) = -1 at both places, so m = 1 leaves e_1 x^2 level with x.
    EXPECT_EQ(b.min_valuation, 2) << pi;
    EXPECT_TRUE(ball_holds(ev, 2, 2) && ball_holds(lv, 2, 2));
    EXPECT_FALSE(ball_holds(ev, 2, 1) && ball_holds(lv, 2, 1));
    EXPECT_TRUE(b.heuristic_tail);
  }
  EXPECT_EQ(ball(c, Place::infinite(k.f), kDefaultTerms).min_valuation, 1);
  EXPECT_EQ(ball(c, k.at("t"), 0).min_valuation, 1);
  EXPECT_THROW(ball(k.m("t + t tau"), k.at("t"), 4), std::invalid_argument);
}

TEST(Ball, CertifiedInequalitiesOnRandomModules) {
  for (int p : {2, 3}) {
    K k(p);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 10; ++it) {
      const auto m = random_module(k.f, rng, 2);
      const Place v = k.at(it % 2 ? "t" : "t + 1");
      const auto b = ball(m, v, 8);
      EXPECT_TRUE(ball_holds(b.exp_valuations, p, b.min_valuation));
      EXPECT_TRUE(ball_holds(b.log_valuations, p, b.min_valuation));
      if (b.min_valuation > 1)
        EXPECT_FALSE(ball_holds(b.exp_valuations, p, b.min_valuation - 1) &&
                     ball_holds(b.log_valuations, p, b.min_valuation - 1));
    }
  }
}

TEST(Eval, ZeroAndIsometry) {
  for (int p : {2, 3}) {
    K k(p);
    std::mt19937_64 rng(12);
    for (int it = 0; it < 6; ++it) {
      const auto m = random_module(k.f, rng, 2);
      const Place v = it % 2 ? k.at("t") : Place::infinite(k.f);
      const AnalyticContext ctx(ProductAction({m}), v, 30);
      EXPECT_TRUE(ctx.exp(0, LocalElem::zero(v)).is_exact_zero());
      EXPECT_TRUE(ctx.log(0, LocalElem::zero(v)).is_exact_zero());
      for (int s = 0; s < 10; ++s) {
        const LocalElem x = random_local(v, rng, ctx.min_valuation() + s % 3, 30);
        EXPECT_EQ(ctx.exp(0, x).valuation(), x.valuation());
        EXPECT_EQ(ctx.log(0, x).valuation(), x.valuation());
        EXPECT_GE(agreement_digits(ctx.exp(0, ctx.log(0, x)), x), 25);
      }
      EXPECT_THROW(ctx.exp(0, random_local(v, rng, ctx.min_valuation() - 1, 30)), BallError);
    }
  }
}

TEST(Eval, LogFunctionalEquationCarlitz) {
  K k;
  const auto c = DrinfeldModule::carlitz(k.f);
  const AnalyticContext ctx(ProductAction({c}), k.at("t"), 40);
  const LocalElem x = ctx.embed(k.r("t^2"));
  const LocalElem lhs = ctx.log(0, act(c, k.p("t"), x));
  const LocalElem rhs = local_scale(ctx.log(0, x), k.r("t"));
  EXPECT_GE(agreement_digits(lhs, rhs), 40);
}

TEST(Cache, SameValuesAsFreshComputation) {
  K k(3);
  const auto m = k.m("t + (t+1) tau + 2 tau^2");
  const Place v = k.at("t");
  const auto cached = cached_local_series(m, SeriesKind::Log, v, 6, 25);
  const auto again = cached_local_series(m, SeriesKind::Log, v, 6, 25);
  const auto fresh = local_series(m, SeriesKind::Log, v, 6, 25);
  EXPECT_EQ(cached.get(), again.get());
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(cached->coeffs[n].digit_string(), fresh.coeffs[n].digit_string());
}

TEST(SameRatio, Examples) {
  K k;
  const auto theta = DrinfeldModule::carlitz(k.f);
  const auto psi = k.m("t + t tau");
  const Place v = k.at("t + 1");
  const RatFunc x = k.r("t^2 + 1");
  EXPECT_TRUE(same_ratio_check(theta, psi, x, k.r("t^3 + t"), k.p("t"), k.p("t"), v, 40));
  EXPECT_TRUE(same_ratio_check(theta, theta, x, x, k.p("t"), k.p("t^2 + 1"), v, 40));
  const auto rep = same_ratio_report(theta, psi, x, x, k.p("t"), k.p("t + 1"), v, 40);
  EXPECT_TRUE(rep.holds);
  EXPECT_GE(rep.agreement, 30);
  // t^2 is a unit at t + 1 and misses both balls.
  EXPECT_THROW(same_ratio_check(theta, psi, k.r("t^2"), k.r("t^2"), k.p("t"), k.p("t + 1"), v, 40), BallError);
}

TEST(Lambda, Examples) {
  K k;
  const auto c = DrinfeldModule::carlitz(k.f);
  const auto psi = k.m("t + t tau");
  const Place v = k.at("t + 1");
  const auto one = lambda_at(ProductAction({c, c}), {k.r("t^2 + 1"), k.r("t^2 + 1")}, k.p("t"), v, 40);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_GE(agreement_digits(one[0], embed(v, k.r("1"), 40)), 39);
  const auto zero = lambda_at(ProductAction({c, c}), {k.r("t^2 + 1"), RatFunc(k.f)}, k.p("t"), v, 40);
  EXPECT_TRUE(zero[0].is_exact_zero());
  const ProductAction pair({c, psi});
  const std::vector<RatFunc> x{k.r("t^2 + 1"), k.r("t^3 + t")};
  const auto a = lambda_at(pair, x, k.p("t"), v, 40);
  const auto b = lambda_at(pair, x, k.p("t^2"), v, 40);
  EXPECT_GE(agreement_digits(a[0], b[0]), 30);
  EXPECT_THROW(lambda_at(pair, {k.r("t"), k.r("t^3 + t")}, k.p("t"), v, 40), Error);
}

TEST(Lambda, NormalizeLead) {
  K k;
  const Place v = k.at("t");
  const std::vector<LocalElem> ys{embed(v, k.r("t^3"), 10), embed(v, k.r("t^2"), 10), embed(v, k.r("t^2 + t^5"), 10)};
  EXPECT_EQ(normalize_lead(ys), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(normalize_lead({embed(v, k.r("t"), 5), embed(v, k.r("t"), 5)}), (std::vector<std::size_t>{0, 1}));
}

TEST(Zu, ExamplesAndEquivariance) {
  K k;
  const auto c = DrinfeldModule::carlitz(k.f);
  const auto psi = k.m("t + t tau");
  const Place v = k.at("t + 1");
  const ProductAction pair({c, psi});
  const auto lam = lambda_at(pair, {k.r("t^2 + 1"), k.r("t^3 + t")}, k.p("t"), v, 40);
  const auto z0 = zu(pair, lam, v, LocalElem::zero(v));
  EXPECT_TRUE(z0[0].is_exact_zero() && z0[1].is_exact_zero());
  const auto single = zu(ProductAction({c}), {}, v, embed(v, k.r("t^2 + 1"), 40));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_GE(agreement_digits(single[0], embed(v, k.r("t^2 + 1"), 40)), 40);

  const LocalElem u = embed(v, k.r("(t^2 + 1)/(t^2 + t + 1)"), 40);
  const auto zu_u = zu(pair, lam, v, u);
  const auto zu_tu = zu(pair, lam, v, act(c, k.p("t"), u));
  EXPECT_GE(agreement_digits(zu_tu[1], act(psi, k.p("t"), zu_u[1])), 30);
  // The orbit itself lies on Z: Z at phi_P(x_1) is phi_P(x).
  const auto on_orbit = zu(pair, lam, v, embed(v, act(c, k.p("t^2 + t"), k.r("t^2 + 1")), 40));
  EXPECT_GE(agreement_digits(on_orbit[1], embed(v, act(psi, k.p("t^2 + t"), k.r("t^3 + t")), 40)), 30);
  std::vector<LocalElem> big{embed(v, k.r("1/(t+1)"), 40)};
  EXPECT_THROW(zu(pair, big, v, u), Error);
}

TEST(NewtonPolygon, Examples) {
  K k;
  const Place v = k.at("t");
  const auto e = [&](const char* s) { return embed(v, k.r(s), 30); };
  EXPECT_EQ(isolated_zero_bound({LocalElem::zero(v), e("1")}, 1), 1);
  EXPECT_EQ(isolated_zero_bound({e("1"), e("1")}, 1), 0);
  EXPECT_LE(isolated_zero_bound({e("t^2 (1 + t)"), LocalElem::zero(v), e("1")}, 1), 2);
  EXPECT_EQ(isolated_zero_bound({e("t^2 (1 + t)"), LocalElem::zero(v), e("1")}, 1), 2);
  EXPECT_EQ(isolated_zero_bound({e("t^2 (1 + t)"), LocalElem::zero(v), e("1")}, 2), 0);
  EXPECT_THROW(isolated_zero_bound({LocalElem::zero(v), LocalElem::zero_to(v, 5)}, 1), Error);
}

}  // namespace
