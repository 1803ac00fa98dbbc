#include <gtest/gtest.h>

#include "dlang/algebra.hpp"
#include "support.hpp"

using namespace dlang;
using dlang::testing::random_nonzero_poly;
using dlang::testing::random_poly;
using dlang::testing::random_ratfunc;

namespace {

FqPoly P(const FieldPtr& f, std::vector<int> c) {
  std::vector<Fq> v;
  for (int x : c) v.push_back(f->from_int(x));
  return FqPoly(f, v);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, HoldOnEveryPair) {
  const auto [p, k] = GetParam();
  auto f = GaloisField::make(p, k);
  const int q = f->order();
  const int step = q > 32 ? 7 : 1;
  for (int i = 0; i < q; i += step) {
    const Fq a = f->element(i);
    EXPECT_EQ(f->pow(a, q), a);
    if (a != f->zero()) EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
    EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
    for (int j = 0; j < q; j += step) {
      const Fq b = f->element(j);
      EXPECT_EQ(f->add(a, b), f->add(b, a));
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      EXPECT_EQ(f->pow(f->add(a, b), p), f->add(f->pow(a, p), f->pow(b, p)));
      for (int l = 0; l < q; l += step * 3) {
        const Fq c = f->element(l);
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{2, 2},
                                           std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 8}));

TEST(Field, ReducibleConductorRejected) {
  EXPECT_THROW(GaloisField::make(2, 2, {1, 0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(GaloisField::make(2, 2, {1, 1, 1}));
}

TEST(Field, GeneratorIsPrimitive) {
  auto f = GaloisField::make(2, 4);
  std::set<Fq> seen;
  for (int i = 0; i < 15; ++i) seen.insert(f->generator_power(i));
  EXPECT_EQ(seen.size(), 15u);
}

TEST(RatFunc, Normalize) {
  auto f = GaloisField::make(2);
  EXPECT_EQ(rat_normalize(P(f, {0, 1, 1}), P(f, {0, 1})), RatFunc(P(f, {1, 1})));
  const RatFunc z = rat_normalize(FqPoly(f), P(f, {1, 1}));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.den().is_one());
  EXPECT_EQ(rat_normalize(P(f, {0, 1}), P(f, {1})), RatFunc::t(f));
  EXPECT_THROW(rat_normalize(P(f, {1}), FqPoly(f)), std::exception);
}

TEST(RatFunc, WeilHeight) {
  auto f = GaloisField::make(2);
  EXPECT_EQ(weil_height(RatFunc::t(f)), 1);
  EXPECT_EQ(weil_height(RatFunc(P(f, {1, 0, 1}), P(f, {0, 1}))), 2);
  EXPECT_EQ(weil_height(RatFunc(f)), 0);
}

TEST(RatFunc, FieldAxiomsRandomised) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3), GaloisField::make(2, 2)}) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
      const RatFunc a = random_ratfunc(f, rng, 4), b = random_ratfunc(f, rng, 4), c = random_ratfunc(f, rng, 4);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
      EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
      EXPECT_EQ((a * b).frobenius(2), a.frobenius(2) * b.frobenius(2));
      EXPECT_TRUE(a.den().is_monic());
      EXPECT_TRUE(gcd(a.num(), a.den()).is_one() || a.is_zero());
    }
  }
}

TEST(FqPoly, EuclideanDivisionReconstructs) {
  auto f = GaloisField::make(3);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const FqPoly a = random_poly(f, rng, 12), b = random_nonzero_poly(f, rng, 6);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    if (!a.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(FqPoly, IndexOrderIsDegreeThenLex) {
  auto f = GaloisField::make(3);
  for (std::uint64_t i = 0; i + 1 < 243; ++i) {
    const FqPoly a = FqPoly::from_index(f, i), b = FqPoly::from_index(f, i + 1);
    EXPECT_EQ(a.index(), i);
    EXPECT_LT(a, b);
  }
}

TEST(FqPoly, XgcdAndInverse) {
  auto f = GaloisField::make(5);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    const FqPoly a = random_nonzero_poly(f, rng, 6), b = random_nonzero_poly(f, rng, 6);
    const Xgcd x = xgcd(a, b);
    EXPECT_EQ(x.s * a + x.t * b, x.g);
    EXPECT_TRUE(x.g.is_monic());
  }
}

TEST(Algebra, IrreducibleMonics) {
  auto f = GaloisField::make(2);
  EXPECT_EQ(irreducible_monics(f, 1), (std::vector<FqPoly>{P(f, {0, 1}), P(f, {1, 1})}));
  EXPECT_EQ(irreducible_monics(f, 2), (std::vector<FqPoly>{P(f, {1, 1, 1})}));
  EXPECT_EQ(irreducible_monics(f, 3), (std::vector<FqPoly>{P(f, {1, 1, 0, 1}), P(f, {1, 0, 1, 1})}));
  // Necklace counts.
  EXPECT_EQ(irreducible_monics(f, 6).size(), 9u);
  EXPECT_EQ(irreducible_monics(GaloisField::make(3), 4).size(), 18u);
}

TEST(Algebra, EnumeratePolys) {
  auto f2 = GaloisField::make(2);
  std::vector<FqPoly> v0, v1;
  for (auto p : enumerate_polys(f2, 0)) v0.push_back(p);
  for (auto p : enumerate_polys(f2, 1)) v1.push_back(p);
  EXPECT_EQ(v0, (std::vector<FqPoly>{FqPoly(f2), P(f2, {1})}));
  EXPECT_EQ(v1, (std::vector<FqPoly>{FqPoly(f2), P(f2, {1}), P(f2, {0, 1}), P(f2, {1, 1})}));
  EXPECT_EQ(std::ranges::distance(enumerate_polys(GaloisField::make(3), 1)), 9);
}

TEST(Algebra, FactorReconstructs) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3), GaloisField::make(2, 2)}) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
      const FqPoly a = random_nonzero_poly(f, rng, 10);
      FqPoly prod = FqPoly::constant(f, a.lead());
      for (const auto& [p, e] : factor(a)) {
        EXPECT_TRUE(is_irreducible(p));
        EXPECT_TRUE(p.is_monic());
        prod *= p.pow(e);
      }
      EXPECT_EQ(prod, a);
    }
  }
}

}  // namespace
