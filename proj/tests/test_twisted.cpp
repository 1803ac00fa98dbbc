#include <gtest/gtest.h>

#include "dlang/expr.hpp"
#include "support.hpp"

using namespace dlang;
using dlang::testing::random_module;
using dlang::testing::random_ratfunc;

namespace {

struct F2 {
  FieldPtr f = GaloisField::make(2);
  RatFunc r(const char* s) const { return parse_ratfunc(f, s); }
  TwistedPoly tw(const char* s) const { return parse_twisted(f, s); }
  FqPoly p(const char* s) const { return r(s).num(); }
  DrinfeldModule carlitz() const { return DrinfeldModule::carlitz(f); }
};

TEST(TwistedPoly, MultiplicationExamples) {
  F2 k;
  const TwistedPoly b = k.tw("t + t^3 tau^2");
  EXPECT_EQ(tw_mul(k.tw("1"), b), b);
  EXPECT_EQ(tw_mul(k.tw("tau"), k.tw("t")), k.tw("t^2 tau"));
  EXPECT_EQ(k.tw("(t + tau)") * k.tw("(t + tau)"), TwistedPoly(k.f, {k.r("t^2"), k.r("t + t^2"), k.r("1")}));
}

TEST(TwistedPoly, ProductMatchesCompositionOfMaps) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3), GaloisField::make(2, 2)}) {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
      std::vector<RatFunc> ca, cb;
      for (int i = 0; i < 3; ++i) ca.push_back(random_ratfunc(f, rng, 2));
      for (int i = 0; i < 2; ++i) cb.push_back(random_ratfunc(f, rng, 2));
      const TwistedPoly a(f, ca), b(f, cb);
      const RatFunc x = random_ratfunc(f, rng, 2);
      EXPECT_EQ((a * b).apply(x), a.apply(b.apply(x)));
      EXPECT_EQ((a + b).apply(x), a.apply(x) + b.apply(x));
    }
  }
}

TEST(DrinfeldModule, Constraints) {
  F2 k;
  EXPECT_THROW(DrinfeldModule(k.tw("t^2 + tau")), std::invalid_argument);
  EXPECT_THROW(DrinfeldModule(k.tw("t")), std::invalid_argument);
  try {
    DrinfeldModule m(k.tw("1 + tau"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "constant coefficient of phi_t must be t");
  }
}

TEST(DrinfeldModule, PhiOf) {
  F2 k;
  const auto m = k.carlitz();
  EXPECT_EQ(phi_of(m, k.p("t")), m.phi_t());
  EXPECT_EQ(phi_of(m, k.p("t^2")), k.tw("t^2 + (t + t^2) tau + tau^2"));
  EXPECT_TRUE(phi_of(m, FqPoly(k.f)).is_zero());
}

TEST(DrinfeldModule, PhiIsARingHomomorphism) {
  auto f = GaloisField::make(3);
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    const auto m = random_module(f, rng, 2);
    const FqPoly a = dlang::testing::random_poly(f, rng, 3), b = dlang::testing::random_poly(f, rng, 3);
    EXPECT_EQ(phi_of(m, a * b), phi_of(m, a) * phi_of(m, b));
    EXPECT_EQ(phi_of(m, a + b), phi_of(m, a) + phi_of(m, b));
    const RatFunc x = random_ratfunc(f, rng, 2);
    EXPECT_EQ(act(m, a, x), phi_of(m, a).apply(x));
  }
}

TEST(DrinfeldModule, Act) {
  F2 k;
  const auto m = k.carlitz();
  EXPECT_EQ(act(m, k.p("t"), k.r("1")), k.r("t + 1"));
  EXPECT_TRUE(act(m, k.p("t^3 + 1"), RatFunc(k.f)).is_zero());
  EXPECT_TRUE(act(m, k.p("t"), k.r("t")).is_zero());
}

TEST(Torsion, Examples) {
  F2 k;
  const auto m = k.carlitz();
  EXPECT_EQ(is_torsion(m, RatFunc(k.f), 4), FqPoly::one(k.f));
  EXPECT_EQ(is_torsion(m, k.r("1"), 4), k.p("t^2 + t"));
  EXPECT_FALSE(is_torsion(m, k.r("t^2"), 4).has_value());
  EXPECT_FALSE(is_torsion_exhaustive(m, k.r("t^2"), 4).has_value());
}

TEST(Torsion, AgreesWithExhaustiveSearch) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3)}) {
    const auto m = DrinfeldModule::carlitz(f);
    // Carlitz torsion points of small annihilator: roots of phi_Q lying in K
    // are the constants for Q = t^q - t, plus random non-torsion values.
    std::mt19937_64 rng(9);
    std::vector<RatFunc> xs;
    for (int i = 0; i < f->order(); ++i) xs.push_back(RatFunc::constant(f, f->element(i)));
    for (int i = 0; i < 10; ++i) xs.push_back(random_ratfunc(f, rng, 2));
    for (const auto& x : xs) EXPECT_EQ(is_torsion(m, x, 3), is_torsion_exhaustive(m, x, 3)) << x.to_string();
  }
}

TEST(Height, Estimates) {
  F2 k;
  const auto m = k.carlitz();
  EXPECT_EQ(canonical_height_estimate(m, RatFunc(k.f), 1), Rational(0));
  EXPECT_EQ(canonical_height_estimate(m, RatFunc(k.f), 5), Rational(0));
  EXPECT_EQ(canonical_height_estimate(m, k.r("1"), 3), Rational(0));
  // deg phi_t(y) = 2 deg y for deg y >= 2, so h(phi_{t^4}(t^2)) = 32.
  EXPECT_EQ(canonical_height_estimate(m, k.r("t^2"), 4), Rational(2));
  EXPECT_TRUE(looks_nontorsion(m, k.r("t^2"), 3));
}

TEST(Reduction, GoodAndBad) {
  F2 k;
  const auto c = k.carlitz();
  for (const char* pi : {"t", "t + 1", "t^2 + t + 1", "t^3 + t + 1"})
    EXPECT_TRUE(good_reduction(c, Place::finite(k.p(pi))));
  EXPECT_FALSE(good_reduction(c, Place::infinite(k.f)));
  const DrinfeldModule m(k.tw("t + (1/t) tau + tau^2"));
  EXPECT_FALSE(good_reduction(m, Place::finite(k.p("t"))));
  EXPECT_TRUE(good_reduction(m, Place::finite(k.p("t + 1"))));
  EXPECT_FALSE(good_reduction(DrinfeldModule(k.tw("t + t tau")), Place::finite(k.p("t"))));
}

TEST(ProductAction, CoordinateWise) {
  F2 k;
  const ProductAction a({k.carlitz(), DrinfeldModule(k.tw("t + t tau"))});
  const auto y = a.act(k.p("t + 1"), {k.r("t^2"), k.r("1")});
  EXPECT_EQ(y[0], act(a[0], k.p("t + 1"), k.r("t^2")));
  EXPECT_EQ(y[1], act(a[1], k.p("t + 1"), k.r("1")));
  EXPECT_THROW(a.act(k.p("t"), {k.r("1")}), std::invalid_argument);
}

}  // namespace
