#include <gtest/gtest.h>

#include "dlang/expr.hpp"
#include "support.hpp"

using namespace dlang;

namespace {

struct Fx {
  FieldPtr f = GaloisField::make(2);
  RatFunc r(const char* s) const { return parse_ratfunc(f, s); }
  FqPoly p(const char* s) const { return r(s).num(); }
  MPoly eq(int g, const char* s) const { return parse_mpoly(f, g, s); }
  DrinfeldModule carlitz() const { return DrinfeldModule::carlitz(f); }
  CyclicModule pair(const char* x1, const char* x2) const {
    return CyclicModule(ProductAction({carlitz(), carlitz()}), {r(x1), r(x2)});
  }
};

// Brute-force intersection: every P, evaluated directly without OrbitView.
std::set<FqPoly> brute(const Variety& V, const CyclicModule& m, int D) {
  std::set<FqPoly> S;
  for (auto P : enumerate_polys(m.action.field(), D - 1))
    if (V.contains(m.action.act(P, m.generator))) S.insert(P);
  return S;
}

TEST(Orbit, SmallCases) {
  Fx s;
  const CyclicModule m = s.pair("t^2", "t");
  const OrbitView o = orbit(m, 1);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_TRUE(o.at(0).P.is_zero());
  EXPECT_TRUE(o.at(0).point[0].is_zero() && o.at(0).point[1].is_zero());
  EXPECT_EQ(o.at(1).point, m.generator);
  const OrbitView o3 = orbit(m, 3);
  for (const auto& e : o3) EXPECT_EQ(e.point, m.action.act(e.P, m.generator));

  const CyclicModule one(ProductAction({s.carlitz()}), {s.r("1")});
  std::vector<RatFunc> vals;
  for (const auto& e : orbit(one, 2)) vals.push_back(e.point[0]);
  EXPECT_EQ(vals, (std::vector<RatFunc>{RatFunc(s.f), s.r("1"), s.r("t + 1"), s.r("t")}));
}

TEST(Intersect, Examples) {
  Fx s;
  const CyclicModule diag = s.pair("t^2 + 1", "t^2 + 1");
  const Variety dv(2, {s.eq(2, "X1 - X2")});
  EXPECT_EQ(intersect(dv, diag, 4).size(), 16u);

  const CyclicModule m = s.pair("t^2", "t");
  const Variety V(2, {s.eq(2, "X2")});
  const auto S = intersect(V, m, 5);
  EXPECT_EQ(S, brute(V, m, 5));
  for (auto P : enumerate_polys(s.f, 4)) EXPECT_EQ(S.count(P) == 1, (P % s.p("t")).is_zero());

  const Variety none(2, {s.eq(2, "X1 - 1/(t+1)")});
  EXPECT_TRUE(intersect(none, m, 5).empty());
}

TEST(Intersect, ParallelEqualsSequential) {
  Fx s;
  const CyclicModule m(ProductAction({s.carlitz(), DrinfeldModule(parse_twisted(s.f, "t + t tau + tau^2"))}),
                       {s.r("t^2"), s.r("t")});
  const Variety V(2, {s.eq(2, "X1 X2 + X1^2")});
  const auto seq = intersect(V, m, 6, 1);
  EXPECT_EQ(seq, intersect(V, m, 6, 4));
  EXPECT_EQ(seq, intersect(V, m, 6, 3));
  EXPECT_EQ(seq, brute(V, m, 6));
}

TEST(Intersect, TranslationCoherence) {
  Fx s;
  const CyclicModule m = s.pair("t^2", "t");
  const Variety V(2, {s.eq(2, "X2"), s.eq(2, "X1^2 + t X1 X2")});
  const auto S = intersect(V, m, 5);
  for (auto P : enumerate_polys(s.f, 4)) {
    const Variety W = translate_by(V, m.action.act(P, m.generator));
    EXPECT_EQ(S.count(P) == 1, W.contains({RatFunc(s.f), RatFunc(s.f)}));
  }
}

TEST(TranslateBy, Examples) {
  Fx s;
  const Variety V(2, {s.eq(2, "X1 - X2")});
  EXPECT_EQ(translate_by(V, {RatFunc(s.f), RatFunc(s.f)}).equations, V.equations);
  EXPECT_EQ(translate_by(V, {s.r("t"), s.r("1/t")}).equations[0], s.eq(2, "X1 - X2 + t - 1/t"));
  const Variety sq(1, {s.eq(1, "X1^2")});
  EXPECT_EQ(translate_by(sq, {s.r("t + 1")}).equations[0], s.eq(1, "X1^2 + t^2 + 1"));
}

TEST(InferCosets, Examples) {
  Fx s;
  std::set<FqPoly> all, mult_t;
  for (auto P : enumerate_polys(s.f, 4)) {
    all.insert(P);
    if ((P % s.p("t")).is_zero()) mult_t.insert(P);
  }
  const auto c_all = infer_cosets(all, s.f, 5, 4);
  ASSERT_EQ(c_all.cosets.size(), 1u);
  EXPECT_TRUE(c_all.cosets[0].d.is_zero());
  EXPECT_TRUE(c_all.cosets[0].Q.is_one());
  EXPECT_TRUE(c_all.isolated.empty());

  const auto c_t = infer_cosets(mult_t, s.f, 5, 4);
  ASSERT_EQ(c_t.cosets.size(), 1u);
  EXPECT_EQ(c_t.cosets[0], (Coset{FqPoly(s.f), s.p("t")}));
  EXPECT_EQ(c_t.expand(s.f, 5), mult_t);

  const auto single = infer_cosets({s.p("t")}, s.f, 5, 4);
  EXPECT_TRUE(single.cosets.empty());
  EXPECT_EQ(single.isolated, (std::vector<FqPoly>{s.p("t")}));

  EXPECT_THROW(infer_cosets(mult_t, s.f, 5, 5), Error);
}

TEST(InferCosets, ReExpansionOracleOnMixedSets) {
  for (auto f : {GaloisField::make(2), GaloisField::make(3)}) {
    std::mt19937_64 rng(13);
    const int D = f->order() == 2 ? 6 : 4;
    for (int it = 0; it < 30; ++it) {
      std::set<FqPoly> S;
      const FqPoly Q = dlang::testing::random_nonzero_poly(f, rng, 2).monic();
      const FqPoly d = dlang::testing::random_poly(f, rng, 3) % Q;
      for (auto P : enumerate_polys(f, D - 1)) {
        if (((P - d) % Q).is_zero()) S.insert(P);
        if (rng() % 11 == 0) S.insert(P);
      }
      const auto c = infer_cosets(S, f, D, D - 1);
      EXPECT_EQ(c.expand(f, D), S);
      for (std::size_t i = 0; i < c.cosets.size(); ++i) {
        EXPECT_LT(c.cosets[i].d.degree(), c.cosets[i].Q.degree() > 0 ? c.cosets[i].Q.degree() : 1);
        for (std::size_t j = 0; j < c.cosets.size(); ++j)
          if (i != j) EXPECT_FALSE(c.cosets[i].inside(c.cosets[j]));
      }
      for (const auto& P : c.isolated)
        for (const auto& k : c.cosets) EXPECT_FALSE(k.contains(P));
    }
  }
}

TEST(Stability, InsufficientAndSufficientEvidence) {
  Fx s;
  const CyclicModule m = s.pair("t^2", "t");
  const Variety V(2, {s.eq(2, "X2")});
  EXPECT_FALSE(check_stability(V, m, 1, 5).stable);
  const auto st = check_stability(V, m, 6, 5);
  EXPECT_TRUE(st.stable);
  EXPECT_EQ(st.at_D.cosets, st.at_next.cosets);
  const auto S = intersect(V, m, 6);
  EXPECT_TRUE(stronger_result_echo(S, st.at_D, 6));
}

TEST(Verify, TorsionCoordinate) {
  Fx s;
  const CyclicModule m = s.pair("t^2", "t");
  const Variety V(2, {s.eq(2, "X2")});
  const auto rep = verify_coset_analytic(V, m, {FqPoly(s.f), s.p("t")}, Place::finite(s.p("t + 1")), 40, 6);
  EXPECT_TRUE(rep.passed);
  ASSERT_EQ(rep.lambdas.size(), 1u);
  EXPECT_TRUE(rep.lambdas[0].is_zero());
  EXPECT_EQ(rep.samples.size(), 10u);
  for (const auto& smp : rep.samples)
    for (auto val : smp.valuations) EXPECT_GE(val, rep.floor);
}

TEST(Verify, Diagonal) {
  Fx s;
  const CyclicModule m = s.pair("t^2 + 1", "t^2 + 1");
  const Variety V(2, {s.eq(2, "X1 - X2")});
  const auto rep = verify_coset_analytic(V, m, {FqPoly(s.f), FqPoly::one(s.f)}, Place::finite(s.p("t + 1")), 40, 5);
  EXPECT_TRUE(rep.passed);
  EXPECT_GE(agreement_digits(rep.lambdas[0], embed(rep.place, s.r("1"), 40)), 35);
  for (const auto& smp : rep.samples)
    for (auto val : smp.valuations) EXPECT_GE(val, 40);
}

TEST(Verify, WrongCosetIsFlagged) {
  Fx s;
  const CyclicModule m = s.pair("t^2", "t");
  const Variety V(2, {s.eq(2, "X2")});
  const auto rep = verify_coset_analytic(V, m, {s.p("1"), s.p("t")}, Place::finite(s.p("t + 1")), 40, 6);
  EXPECT_FALSE(rep.passed);
  bool orbit_failed = false;
  for (const auto& smp : rep.samples) orbit_failed = orbit_failed || (smp.kind == "orbit" && !smp.passed);
  EXPECT_TRUE(orbit_failed);
}

TEST(Verify, BadReductionRejected) {
  Fx s;
  const CyclicModule m(ProductAction({s.carlitz(), DrinfeldModule(parse_twisted(s.f, "t + t tau"))}),
                       {s.r("t^2"), s.r("t")});
  const Variety V(2, {s.eq(2, "X2")});
  EXPECT_THROW(verify_coset_analytic(V, m, {FqPoly(s.f), s.p("t")}, Place::finite(s.p("t")), 40, 6), std::exception);
}

TEST(RankOne, TorsionSubgroupAndTranslates) {
  Fx s;
  const ProductAction a({s.carlitz(), s.carlitz()});
  const auto T = torsion_subgroup(a, {{RatFunc(s.f), s.r("t")}}, 4);
  EXPECT_EQ(T.size(), 2u);
  EXPECT_THROW(torsion_subgroup(a, {{s.r("t^2"), s.r("t")}}, 4), Error);

  const RankOneModule plain{{}, s.pair("t^2", "t^2")};
  const Variety V(2, {s.eq(2, "X1 + X2 + t")});
  const auto r0 = intersect_rank_one(V, plain, 4, 3);
  ASSERT_EQ(r0.size(), 1u);
  EXPECT_EQ(r0[0].S, intersect(V, plain.free_part, 4));

  const RankOneModule withT{{{RatFunc(s.f), s.r("t")}}, s.pair("t^2", "t^2")};
  const auto r1 = intersect_rank_one(V, withT, 4, 3);
  ASSERT_EQ(r1.size(), 2u);
  std::size_t total = 0;
  for (const auto& tt : r1) {
    total += tt.S.size();
    EXPECT_EQ(tt.S, intersect(translate_by(V, tt.gamma), withT.free_part, 4));
  }
  EXPECT_EQ(total, 16u);

  const Variety empty(2, {s.eq(2, "X1 + 1/(t^2+t+1)")});
  for (const auto& tt : intersect_rank_one(empty, withT, 4, 3)) {
    EXPECT_TRUE(tt.S.empty());
    EXPECT_TRUE(tt.structure.cosets.empty() && tt.structure.isolated.empty());
  }
}

}  // namespace
