#include "dlang/analytic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace dlang {

std::string to_string(SeriesKind k) { return k == SeriesKind::Exp ? "exp" : "log"; }

namespace {

FqPoly t_power_minus_t(const FieldPtr& f, int n) {
  // t^(q^n) - t
  return FqPoly::t(f).frobenius(n) - FqPoly::t(f);
}

void require_order(int N) {
  if (N < 0) throw std::invalid_argument("series order must be non-negative");
}

}  // namespace

ExpLogSeries exp_coeffs(const DrinfeldModule& m, int N) {
  require_order(N);
  const FieldPtr& f = m.field();
  const auto& a = m.phi_t().coeffs();
  std::vector<RatFunc> e{RatFunc::one(f)};
  for (int n = 1; n <= N; ++n) {
    RatFunc s(f);
    for (int j = 1; j <= std::min(m.rank(), n); ++j) {
      if (a[j].is_zero() || e[n - j].is_zero()) continue;
      s += a[j] * e[n - j].frobenius(j);
    }
    e.push_back(s / RatFunc(t_power_minus_t(f, n)));
  }
  return {SeriesKind::Exp, m, std::move(e)};
}

ExpLogSeries log_coeffs(const DrinfeldModule& m, int N) {
  require_order(N);
  const FieldPtr& f = m.field();
  std::vector<RatFunc> l{RatFunc::one(f)};
  for (int n = 1; n <= N; ++n) {
    RatFunc s(f);
    for (int i = std::max(0, n - m.rank()); i < n; ++i) {
      const RatFunc& a = m.phi_t().coeffs()[n - i];
      if (a.is_zero() || l[i].is_zero()) continue;
      s += l[i] * a.frobenius(i);
    }
    l.push_back(s / RatFunc(-t_power_minus_t(f, n)));
  }
  return {SeriesKind::Log, m, std::move(l)};
}

std::vector<RatFunc> compose_truncated(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, int N) {
  require_order(N);
  if (a.empty() || b.empty()) throw std::invalid_argument("empty series");
  const FieldPtr& f = a.front().field();
  std::vector<RatFunc> c(static_cast<std::size_t>(N) + 1, RatFunc(f));
  for (int i = 0; i <= N && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= N && j < static_cast<int>(b.size()); ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j].frobenius(i);
    }
  }
  return c;
}

int effective_terms(const FieldPtr& f, int requested) {
  if (requested < 0) throw std::invalid_argument("series order must be non-negative");
  if (requested == 0) return 0;
  const long long q = f->order();
  long long qn = 1;
  int n = 0;
  while (n < requested && qn * q <= (1LL << 40)) {
    qn *= q;
    ++n;
  }
  return std::max(n, 1);
}

LocalSeries local_series(const DrinfeldModule& m, SeriesKind kind, const Place& v, int terms, int digits) {
  require_order(terms);
  if (digits < 1) throw std::invalid_argument("series needs at least one digit");
  require_same_field(m.field(), v.field());
  const int work = digits + 8;
  const LocalElem t = embed(v, RatFunc::t(m.field()), work);
  const auto a = embedded_phi_t(m, v, work);
  const int r = m.rank();
  std::vector<LocalElem> c{embed(v, RatFunc::one(m.field()), work)};
  for (int n = 1; n <= terms; ++n) {
    LocalElem s = LocalElem::zero(v);
    LocalElem d = t.frobenius(n) - t;
    if (kind == SeriesKind::Exp) {
      for (int j = 1; j <= std::min(r, n); ++j) s += a[j] * c[n - j].frobenius(j);
    } else {
      for (int i = std::max(0, n - r); i < n; ++i) s += c[i] * a[n - i].frobenius(i);
      d = -d;
    }
    c.push_back(s.is_exact_zero() ? s : s / d);
  }
  for (auto& x : c)
    if (!x.is_zero()) x = x.with_precision(x.valuation() + digits);
  return {kind, v, std::move(c)};
}

LocalSeries embed_series(const ExpLogSeries& s, const Place& v, int digits) {
  std::vector<LocalElem> c;
  c.reserve(s.coeffs.size());
  for (const auto& x : s.coeffs) c.push_back(embed(v, x, digits));
  return {s.kind, v, std::move(c)};
}

// ----------------------------------------------------------------- balls

namespace {

using i128 = __int128;

Valuation smallest_m_above(i128 numerator, i128 denominator) {
  // Smallest m >= 1 with m * denominator > numerator, denominator > 0.
  if (numerator < 0) return 1;
  i128 m = numerator / denominator + 1;
  return m > (i128(1) << 40) ? (1LL << 40) : static_cast<Valuation>(std::max<i128>(m, 1));
}

Valuation min_m_for(const std::vector<Valuation>& vals, i128 q) {
  Valuation m = 1;
  int prev = vals.empty() || vals[0] >= kInfinity ? -1 : 0;
  i128 qn = 1;
  for (std::size_t n = 1; n < vals.size(); ++n) {
    qn *= q;
    if (vals[n] >= kInfinity) continue;
    const i128 vn = vals[n];
    m = std::max(m, smallest_m_above(-vn, qn - 1));
    if (prev >= 0) {
      i128 qk = 1;
      for (int i = 0; i < prev; ++i) qk *= q;
      m = std::max(m, smallest_m_above(i128(vals[prev]) - vn, qn - qk));
    }
    prev = static_cast<int>(n);
  }
  return m;
}

bool increments_increase(const std::vector<Valuation>& vals, i128 q, Valuation m) {
  std::vector<i128> terms;
  i128 qn = 1;
  for (std::size_t n = 0; n < vals.size(); ++n) {
    if (n > 0) qn *= q;
    if (vals[n] < kInfinity) terms.push_back(i128(vals[n]) + qn * m);
  }
  if (terms.size() < 4) return true;
  const std::size_t k = terms.size();
  const i128 d1 = terms[k - 3] - terms[k - 4], d2 = terms[k - 2] - terms[k - 3], d3 = terms[k - 1] - terms[k - 2];
  return d1 < d2 && d2 < d3;
}

std::vector<Valuation> valuations_of(const LocalSeries& s) {
  std::vector<Valuation> out;
  for (const auto& c : s.coeffs) out.push_back(c.is_exact_zero() ? kInfinity : c.valuation());
  return out;
}

void require_good_reduction(const DrinfeldModule& m, const Place& v) {
  if (!v.is_infinite() && !good_reduction(m, v))
    throw std::invalid_argument("bad reduction at " + v.to_string());
}

}  // namespace

ConvergenceBall certify_ball(const Place& v, const std::vector<Valuation>& exp_vals,
                             const std::vector<Valuation>& log_vals) {
  const i128 q = v.field()->order();
  const Valuation m = std::max(min_m_for(exp_vals, q), min_m_for(log_vals, q));
  if (m > (1LL << 20)) throw Error("no certified ball at this truncation");
  const int order = static_cast<int>(std::max(exp_vals.size(), log_vals.size())) - 1;
  const bool increasing = increments_increase(exp_vals, q, m) && increments_increase(log_vals, q, m);
  return ConvergenceBall{v, m, order, true, increasing, v.is_infinite(), exp_vals, log_vals};
}

ConvergenceBall ball(const DrinfeldModule& m, const Place& v, int N) {
  require_good_reduction(m, v);
  const int terms = effective_terms(m.field(), N);
  const auto e = cached_local_series(m, SeriesKind::Exp, v, terms, 8);
  const auto l = cached_local_series(m, SeriesKind::Log, v, terms, 8);
  return certify_ball(v, valuations_of(*e), valuations_of(*l));
}

// ------------------------------------------------------------ evaluation

LocalElem eval_series(const LocalSeries& s, const ConvergenceBall& b, const LocalElem& x) {
  if (!(x.place() == s.place) || !(b.place == s.place))
    throw std::invalid_argument("series, ball and point at different places");
  if (!b.contains(x)) throw BallError("outside convergence ball");
  if (x.is_exact_zero()) return x;
  LocalElem acc = LocalElem::zero(s.place);
  LocalElem power = x;
  Valuation last = kInfinity;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) power = power.frobenius();
    const LocalElem& c = s.coeffs[n];
    if (c.is_exact_zero()) continue;
    acc += c * power;
    last = c.valuation() + power.valuation();
  }
  // Later terms are assumed to have valuation above the last computed one.
  return last < kInfinity ? acc.with_precision(last + 1) : acc;
}

LocalElem eval_exp(const LocalSeries& s, const ConvergenceBall& b, const LocalElem& x) {
  if (s.kind != SeriesKind::Exp) throw std::invalid_argument("not an exponential series");
  return eval_series(s, b, x);
}

LocalElem eval_log(const LocalSeries& s, const ConvergenceBall& b, const LocalElem& x) {
  if (s.kind != SeriesKind::Log) throw std::invalid_argument("not a logarithm series");
  return eval_series(s, b, x);
}

namespace {
int digits_of(const LocalElem& x) {
  return x.is_zero() ? 1 : static_cast<int>(std::min<Valuation>(x.relative_precision(), 1 << 20));
}
}  // namespace

LocalElem eval_exp(const ExpLogSeries& s, const ConvergenceBall& b, const LocalElem& x) {
  if (s.kind != SeriesKind::Exp) throw std::invalid_argument("not an exponential series");
  return eval_series(embed_series(s, x.place(), digits_of(x)), b, x);
}

LocalElem eval_log(const ExpLogSeries& s, const ConvergenceBall& b, const LocalElem& x) {
  if (s.kind != SeriesKind::Log) throw std::invalid_argument("not a logarithm series");
  return eval_series(embed_series(s, x.place(), digits_of(x)), b, x);
}

// ----------------------------------------------------------------- cache

namespace {

struct SeriesCache {
  using Key = std::tuple<std::string, std::string, std::string, int, int, int>;
  std::shared_mutex mu;
  std::map<Key, std::shared_ptr<const LocalSeries>> entries;
};

SeriesCache& series_cache() {
  static SeriesCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const LocalSeries> cached_local_series(const DrinfeldModule& m, SeriesKind kind, const Place& v,
                                                       int terms, int digits) {
  SeriesCache::Key key{m.field()->describe(), m.phi_t().to_string(), v.to_string(),
                       static_cast<int>(kind), terms, digits};
  auto& cache = series_cache();
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  }
  auto s = std::make_shared<const LocalSeries>(local_series(m, kind, v, terms, digits));
  std::unique_lock lock(cache.mu);
  return cache.entries.emplace(std::move(key), std::move(s)).first->second;
}

// ------------------------------------------------------- AnalyticContext

AnalyticContext::AnalyticContext(const ProductAction& action, const Place& v, int digits, int terms)
    : action_(action), place_(v), digits_(digits), terms_(effective_terms(action.field(), terms)) {
  if (digits < 1) throw std::invalid_argument("precision must be positive");
  require_same_field(action.field(), v.field());
  for (const auto& m : action.modules()) {
    require_good_reduction(m, v);
    exp_.push_back(cached_local_series(m, SeriesKind::Exp, v, terms_, digits_));
    log_.push_back(cached_local_series(m, SeriesKind::Log, v, terms_, digits_));
    balls_.push_back(certify_ball(v, valuations_of(*exp_.back()), valuations_of(*log_.back())));
    min_valuation_ = std::max(min_valuation_, balls_.back().min_valuation);
  }
}

LocalElem AnalyticContext::log(std::size_t i, const LocalElem& x) const { return eval_log(*log_.at(i), balls_[i], x); }

LocalElem AnalyticContext::exp(std::size_t i, const LocalElem& x) const { return eval_exp(*exp_.at(i), balls_[i], x); }

LocalElem AnalyticContext::embed(const RatFunc& x) const { return dlang::embed(place_, x, digits_); }

// ------------------------------------------------------------ same ratio

SameRatioReport same_ratio_report(const DrinfeldModule& theta, const DrinfeldModule& psi, const RatFunc& x,
                                  const RatFunc& y, const FqPoly& P, const FqPoly& Q, const Place& v, int N,
                                  int terms) {
  AnalyticContext ctx(ProductAction({theta, psi}), v, N, terms);
  const LocalElem tp = ctx.embed(act(theta, P, x));
  const LocalElem tq = ctx.embed(act(theta, Q, x));
  const LocalElem pp = ctx.embed(act(psi, P, y));
  const LocalElem pq = ctx.embed(act(psi, Q, y));
  for (const LocalElem* e : {&tp, &tq})
    if (!ctx.ball(0).contains(*e)) throw BallError("outside convergence ball");
  for (const LocalElem* e : {&pp, &pq})
    if (!ctx.ball(1).contains(*e)) throw BallError("outside convergence ball");
  LocalElem left = ctx.log(0, tp) * ctx.log(1, pq);
  LocalElem right = ctx.log(0, tq) * ctx.log(1, pp);
  const Valuation agree = agreement_digits(left, right);
  const bool holds = (left - right).is_zero();
  return {holds, std::move(left), std::move(right), agree, ctx.ball(0).min_valuation, ctx.ball(1).min_valuation};
}

bool same_ratio_check(const DrinfeldModule& theta, const DrinfeldModule& psi, const RatFunc& x, const RatFunc& y,
                      const FqPoly& P, const FqPoly& Q, const Place& v, int N) {
  return same_ratio_report(theta, psi, x, y, P, Q, v, N).holds;
}

// ---------------------------------------------------------------- lambda

std::vector<LocalElem> lambdas_from_point(const AnalyticContext& ctx, const std::vector<LocalElem>& y) {
  const std::size_t g = ctx.action().dimension();
  if (y.size() != g) throw std::invalid_argument("point dimension does not match the action");
  for (std::size_t i = 0; i < g; ++i)
    if (!ctx.ball(i).contains(y[i])) throw BallError("outside convergence ball");
  const LocalElem l1 = ctx.log(0, y[0]);
  if (l1.is_zero()) throw Error("λ undefined: x_1 torsion");
  std::vector<LocalElem> out;
  for (std::size_t i = 1; i < g; ++i) out.push_back(ctx.log(i, y[i]) / l1);
  return out;
}

std::vector<LocalElem> lambda_at(const ProductAction& action, const std::vector<RatFunc>& point, const FqPoly& P,
                                 const Place& v, int N, int terms) {
  if (P.is_zero()) throw std::invalid_argument("P must be nonzero");
  AnalyticContext ctx(action, v, N, terms);
  std::vector<LocalElem> x;
  for (const auto& c : point) x.push_back(ctx.embed(c));
  return lambdas_from_point(ctx, action.act(P, x));
}

std::vector<std::size_t> normalize_lead(const std::vector<LocalElem>& values) {
  if (values.empty()) throw std::invalid_argument("no coordinates");
  std::size_t lead = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i].valuation() < values[lead].valuation()) lead = i;
  std::vector<std::size_t> perm{lead};
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != lead) perm.push_back(i);
  return perm;
}

// -------------------------------------------------------------------- Z_u

std::vector<LocalElem> zu(const AnalyticContext& ctx, const std::vector<LocalElem>& lambdas, const LocalElem& u) {
  const std::size_t g = ctx.action().dimension();
  if (lambdas.size() + 1 != g) throw std::invalid_argument("expected g - 1 lambdas");
  if (!ctx.ball(0).contains(u)) throw BallError("outside convergence ball");
  for (const auto& l : lambdas)
    if (l.valuation() < 0) throw Error("uncertified λ magnitude");
  const LocalElem l1 = ctx.log(0, u);
  std::vector<LocalElem> out{u};
  for (std::size_t i = 1; i < g; ++i) {
    const LocalElem w = lambdas[i - 1] * l1;
    if (!ctx.ball(i).contains(w)) throw BallError("outside convergence ball");
    out.push_back(ctx.exp(i, w));
  }
  return out;
}

std::vector<LocalElem> zu(const ProductAction& action, const std::vector<LocalElem>& lambdas, const Place& v,
                          const LocalElem& u) {
  const Valuation digits = u.is_zero() ? 1 : std::min<Valuation>(u.relative_precision(), 1 << 20);
  return zu(AnalyticContext(action, v, static_cast<int>(digits)), lambdas, u);
}

// --------------------------------------------------------- Newton polygon

int isolated_zero_bound(const std::vector<LocalElem>& coeffs, Valuation min_val) {
  struct Pt {
    long long i;
    Valuation v;
  };
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) pts.push_back({static_cast<long long>(i), coeffs[i].valuation()});
  if (pts.empty()) throw Error("series indistinguishable from zero");
  // Lower convex hull, left to right.
  std::vector<Pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      const i128 cross = i128(b.i - a.i) * (p.v - a.v) - i128(b.v - a.v) * (p.i - a.i);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  long long count = pts.front().i;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const i128 di = hull[k].i - hull[k - 1].i;
    const i128 dv = i128(hull[k].v) - hull[k - 1].v;
    // slope dv/di <= -min_val
    if (dv <= -i128(min_val) * di) count += static_cast<long long>(di);
  }
  return static_cast<int>(count);
}

}  // namespace dlang
