#include <benchmark/benchmark.h>

#include <random>

#include "dlang/analytic.hpp"
#include "dlang/expr.hpp"
#include "dlang/mordell.hpp"

using namespace dlang;

namespace {

FqPoly random_poly(const FieldPtr& f, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(0, f->order() - 1);
  std::vector<Fq> cs(deg + 1);
  for (auto& x : cs) x = f->element(c(rng));
  cs.back() = f->one();
  return FqPoly(f, cs);
}

void BM_PolyMul(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(static_cast<int>(state.range(1)));
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const FqPoly a = random_poly(f, rng, n), b = random_poly(f, rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(n);
}
BENCHMARK(BM_PolyMul)->ArgsProduct({{16, 64, 256}, {2, 3}});

void BM_PolyDivMod(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(2);
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const FqPoly a = random_poly(f, rng, 2 * n), b = random_poly(f, rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a % b);
}
BENCHMARK(BM_PolyDivMod)->Arg(16)->Arg(64)->Arg(256);

void BM_ExpCoeffs(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(2);
  const DrinfeldModule c = DrinfeldModule::carlitz(f);
  for (auto _ : state) benchmark::DoNotOptimize(exp_coeffs(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExpCoeffs)->Arg(4)->Arg(6)->Arg(8);

void BM_LocalSeries(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(2);
  const DrinfeldModule c = DrinfeldModule::carlitz(f);
  const Place v = Place::finite(parse_ratfunc(f, "t + 1").num());
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(local_series(c, SeriesKind::Exp, v, kDefaultTerms, digits));
}
BENCHMARK(BM_LocalSeries)->Arg(20)->Arg(40)->Arg(80);

void BM_EvalExpLog(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(2);
  const DrinfeldModule c = DrinfeldModule::carlitz(f);
  const Place v = Place::finite(parse_ratfunc(f, "t + 1").num());
  const AnalyticContext ctx(ProductAction({c}), v, 40);
  const LocalElem x = embed(v, parse_ratfunc(f, "t^2 + 1"), 40);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.log(0, ctx.exp(0, x)));
}
BENCHMARK(BM_EvalExpLog);

void BM_Intersect(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(2);
  const DrinfeldModule c = DrinfeldModule::carlitz(f);
  const CyclicModule m(ProductAction({c, c}), {parse_ratfunc(f, "t^2"), parse_ratfunc(f, "t")});
  const Variety V(2, {parse_mpoly(f, 2, "X2")});
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intersect(V, m, D));
}
BENCHMARK(BM_Intersect)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
