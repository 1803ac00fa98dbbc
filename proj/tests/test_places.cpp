#include <gtest/gtest.h>

#include "dlang/expr.hpp"
#include "support.hpp"

using namespace dlang;
using dlang::testing::random_nonzero_ratfunc;
using dlang::testing::random_ratfunc;

namespace {

FieldPtr F2() { return GaloisField::make(2); }
RatFunc R(const FieldPtr& f, const char* s) { return parse_ratfunc(f, s); }
Place at(const FieldPtr& f, const char* pi) { return Place::finite(R(f, pi).num()); }

std::vector<int> digit_ints(const LocalElem& x) {
  std::vector<int> out;
  for (const auto& d : x.digits()) out.push_back(static_cast<int>(d.index()));
  return out;
}

TEST(Valuation, Examples) {
  auto f = F2();
  EXPECT_EQ(valuation(Place::infinite(f), R(f, "t")), -1);
  EXPECT_EQ(valuation(at(f, "t"), R(f, "t^3/(t+1)")), 3);
  EXPECT_EQ(valuation(at(f, "t^2+t+1"), R(f, "(t^3+1)/(t+1)^2")), 1);
  EXPECT_EQ(valuation(at(f, "t^2+t+1"), R(f, "t/(t+1)")), 0);
  EXPECT_EQ(valuation(at(f, "t"), RatFunc(f)), kInfinity);
  EXPECT_THROW(at(f, "t^2+1"), std::invalid_argument);
}

TEST(AbsValue, Examples) {
  auto f = F2();
  EXPECT_EQ(abs_value(Place::infinite(f), R(f, "t")).log_q, 1);
  EXPECT_EQ(abs_value(at(f, "t^2+t+1"), R(f, "t")).log_q, 0);
  EXPECT_EQ(abs_value(at(f, "t^2+t+1"), R(f, "t^2+t+1")).log_q, -2);
  for (const char* pi : {"t", "t+1", "t^2+t+1"}) EXPECT_EQ(abs_value(at(f, pi), R(f, "1")).log_q, 0);
  EXPECT_TRUE(abs_value(at(f, "t"), RatFunc(f)).zero);
}

TEST(ProductFormula, Examples) {
  auto f = F2();
  const auto s = support(R(f, "t"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].valuation, 1);
  EXPECT_EQ(s[1].place, "inf");
  EXPECT_EQ(s[1].valuation, -1);
  EXPECT_TRUE(product_formula_check(R(f, "t")));
  EXPECT_TRUE(product_formula_check(R(f, "1")));
  EXPECT_TRUE(support(R(f, "1")).empty());
  EXPECT_TRUE(product_formula_check(R(f, "(t^2+t)/(t^2+t+1)")));
  EXPECT_THROW(product_formula_check(RatFunc(f)), std::domain_error);
}

TEST(ProductFormula, Random) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3), GaloisField::make(2, 2)}) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) EXPECT_TRUE(product_formula_check(random_nonzero_ratfunc(f, rng, 6)));
  }
}

TEST(Embed, Examples) {
  auto f = F2();
  const LocalElem g = embed(at(f, "t"), R(f, "1/(1+t)"), 4);
  EXPECT_EQ(g.valuation(), 0);
  EXPECT_EQ(g.precision(), 4);
  EXPECT_EQ(digit_ints(g), (std::vector<int>{1, 1, 1, 1}));
  const LocalElem i = embed(Place::infinite(f), R(f, "t"), 3);
  EXPECT_EQ(i.valuation(), -1);
  EXPECT_EQ(digit_ints(i), (std::vector<int>{1, 0, 0}));
  const Place w = at(f, "t^2+t+1");
  const LocalElem p = embed(w, R(f, "t^2+t+1"), 5);
  EXPECT_EQ(p.valuation(), 1);
  EXPECT_EQ(digit_ints(p)[0], 1);
  EXPECT_TRUE(embed(w, RatFunc(f), 5).is_exact_zero());
}

TEST(Local, Arithmetic) {
  auto f = F2();
  const Place v = at(f, "t");
  const LocalElem a = embed(v, R(f, "1/(1+t)"), 20);
  const LocalElem b = embed(v, R(f, "1+t"), 20);
  EXPECT_EQ(digit_ints(a + LocalElem::zero(v)), digit_ints(a));
  const LocalElem one = a * b;
  EXPECT_EQ(one.precision(), 20);
  EXPECT_EQ(digit_ints(one), digit_ints(embed(v, R(f, "1"), 20)));
  const LocalElem c = embed(v, R(f, "t^3/(t+1)"), 10);
  EXPECT_EQ((c * a).valuation(), 3);
  EXPECT_EQ((c * c).precision(), 16);
  EXPECT_THROW(LocalElem::zero_to(v, 5).inverse(), PrecisionError);
}

TEST(Local, EmbedIsAHomomorphism) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3)}) {
    std::mt19937_64 rng(4);
    const std::vector<Place> places{Place::finite(FqPoly::t(f)), Place::finite(FqPoly::t(f) + FqPoly::one(f)),
                                    Place::infinite(f), Place::finite(irreducible_monics(f, 2).front())};
    for (const auto& v : places) {
      for (int it = 0; it < 40; ++it) {
        const RatFunc x = random_ratfunc(f, rng, 4), y = random_ratfunc(f, rng, 4);
        const int N = 16;
        const LocalElem ex = embed(v, x, N), ey = embed(v, y, N);
        const LocalElem s = ex + ey, p = ex * ey;
        EXPECT_GE(agreement_digits(s, embed(v, x + y, N + 8)), std::min(s.relative_precision(), Valuation(N)));
        EXPECT_GE(agreement_digits(p, embed(v, x * y, N + 8)), std::min(p.relative_precision(), Valuation(N)));
        if (!x.is_zero() && !y.is_zero() && valuation(v, x) != valuation(v, y))
          EXPECT_EQ(valuation(v, x + y), std::min(valuation(v, x), valuation(v, y)));
        if (!x.is_zero()) {
          const LocalElem inv = ex.inverse();
          EXPECT_EQ(inv.valuation(), -ex.valuation());
          EXPECT_GE(agreement_digits(inv, embed(v, x.inverse(), N)), Valuation(N));
        }
      }
    }
  }
}

TEST(Local, ScaleAndFrobenius) {
  auto f = GaloisField::make(3);
  const Place v = Place::finite(FqPoly::t(f) + FqPoly::one(f));
  const RatFunc x = R(f, "(t^2 + 1)/(t + 2)");
  const LocalElem ex = embed(v, x, 12);
  EXPECT_GE(agreement_digits(local_scale(ex, R(f, "t^2")), embed(v, x * R(f, "t^2"), 12)), 12);
  EXPECT_GE(agreement_digits(ex.frobenius(), embed(v, x.frobenius(), 36)), 12);
  EXPECT_EQ(ex.frobenius().valuation(), 3 * ex.valuation());
}

}  // namespace
