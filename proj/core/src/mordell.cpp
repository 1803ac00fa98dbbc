#include "dlang/mordell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "dlang/algebra.hpp"

namespace dlang {

// ---------------------------------------------------------------- Variety

Variety::Variety(int g_, std::vector<MPoly> eqs) : g(g_), equations(std::move(eqs)) {
  if (g < 1) throw std::invalid_argument("variety dimension must be positive");
  if (equations.empty()) throw std::invalid_argument("a variety needs at least one equation");
  for (const auto& f : equations)
    if (f.nvars() != g) throw std::invalid_argument("equation uses variables beyond X_" + std::to_string(g));
}

bool Variety::contains(const std::vector<RatFunc>& x) const {
  return std::all_of(equations.begin(), equations.end(), [&](const MPoly& f) { return f.eval(x).is_zero(); });
}

Variety translate_by(const Variety& V, const std::vector<RatFunc>& p) {
  if (static_cast<int>(p.size()) != V.g) throw std::invalid_argument("translation dimension does not match variety");
  const FieldPtr& f = V.equations.front().field();
  // powers[i][k] = (p_i + X_i)^k
  std::vector<std::vector<MPoly>> powers(V.g);
  for (int i = 0; i < V.g; ++i)
    powers[i].push_back(MPoly::constant(f, V.g, RatFunc::one(f)));
  std::vector<MPoly> out;
  for (const auto& eq : V.equations) {
    MPoly acc(f, V.g);
    for (const auto& [e, c] : eq.terms()) {
      MPoly term = MPoly::constant(f, V.g, c);
      for (int i = 0; i < V.g; ++i) {
        auto& pw = powers[i];
        while (static_cast<int>(pw.size()) <= e[i])
          pw.push_back(pw.back() * (MPoly::constant(f, V.g, p[i]) + MPoly::variable(f, V.g, i)));
        if (e[i] > 0) term = term * pw[e[i]];
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return Variety(V.g, std::move(out));
}

CyclicModule::CyclicModule(ProductAction a, std::vector<RatFunc> x) : action(std::move(a)), generator(std::move(x)) {
  if (generator.size() != action.dimension())
    throw std::invalid_argument("generator dimension does not match the action");
  for (const auto& c : generator) require_same_field(action.field(), c.field());
}

// ------------------------------------------------------------------ orbit

OrbitView::OrbitView(const CyclicModule& m, int D) : field_(m.action.field()), g_(m.action.dimension()) {
  if (D < 0) throw std::invalid_argument("D must be non-negative");
  const auto q = static_cast<std::uint64_t>(field_->order());
  count_ = 1;
  for (int i = 0; i < D; ++i) {
    if (count_ > (std::uint64_t{1} << 40) / q) throw std::overflow_error("orbit enumeration too large");
    count_ *= q;
  }
  std::vector<RatFunc> y = m.generator;
  for (int i = 0; i < D; ++i) {
    if (i > 0)
      for (std::size_t j = 0; j < g_; ++j) y[j] = m.action[j].phi_t().apply(y[j]);
    basis_.push_back(y);
  }
}

std::vector<RatFunc> OrbitView::point(const FqPoly& P) const {
  if (P.degree() >= static_cast<int>(basis_.size())) throw std::out_of_range("P beyond the orbit bound");
  std::vector<RatFunc> out(g_, RatFunc(field_));
  for (int i = 0; i <= P.degree(); ++i) {
    const Fq c = P.coeff(i);
    if (c.v == 0) continue;
    for (std::size_t j = 0; j < g_; ++j) out[j] += basis_[i][j].scaled(c);
  }
  return out;
}

OrbitEntry OrbitView::at(std::uint64_t index) const {
  FqPoly P = FqPoly::from_index(field_, index);
  auto pt = point(P);
  return {std::move(P), std::move(pt)};
}

OrbitView orbit(const CyclicModule& m, int D) { return OrbitView(m, D); }

std::set<FqPoly> intersect(const Variety& V, const CyclicModule& m, int D, unsigned threads) {
  if (V.g != static_cast<int>(m.action.dimension()))
    throw std::invalid_argument("variety dimension does not match the module");
  const OrbitView view(m, D);
  const std::uint64_t n = view.size();
  const auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<FqPoly>& out) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      OrbitEntry e = view.at(i);
      if (V.contains(e.point)) out.push_back(std::move(e.P));
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(n, 64))));
  std::vector<std::vector<FqPoly>> parts(threads);
  if (threads == 1) {
    scan(0, n, parts[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t lo = n * k / threads, hi = n * (k + 1) / threads;
      workers.emplace_back([&, lo, hi, k] { scan(lo, hi, parts[k]); });
    }
  }
  std::set<FqPoly> S;
  for (auto& p : parts) S.insert(std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return S;
}

// ---------------------------------------------------------------- cosets

bool Coset::inside(const Coset& o) const { return (Q % o.Q).is_zero() && o.contains(d); }

bool CosetStructure::contains(const FqPoly& P) const {
  for (const auto& c : cosets)
    if (c.contains(P)) return true;
  return std::find(isolated.begin(), isolated.end(), P) != isolated.end();
}

namespace {

std::uint64_t power(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// Members d + R Q with deg < D, in order of R's index.
template <class F>
bool for_each_member(const FieldPtr& f, const Coset& c, int D, F&& fn) {
  const int span = D - c.Q.degree();
  if (span <= 0) return fn(c.d);
  const std::uint64_t n = power(f->order(), span);
  for (std::uint64_t r = 0; r < n; ++r)
    if (!fn(c.d + FqPoly::from_index(f, r) * c.Q)) return false;
  return true;
}

}  // namespace

std::set<FqPoly> CosetStructure::expand(const FieldPtr& f, int D) const {
  std::set<FqPoly> out;
  for (const auto& c : cosets)
    for_each_member(f, c, D, [&](FqPoly P) {
      if (P.degree() < D) out.insert(std::move(P));
      return true;
    });
  for (const auto& P : isolated)
    if (P.degree() < D) out.insert(P);
  return out;
}

CosetStructure infer_cosets(const std::set<FqPoly>& S, const FieldPtr& f, int D, int max_mod_deg) {
  if (max_mod_deg >= D) throw Error("modulus exceeds evidence");
  if (max_mod_deg < 0) throw std::invalid_argument("max_mod_deg must be non-negative");
  for (const auto& P : S)
    if (P.degree() >= D) throw std::invalid_argument("S contains a polynomial of degree >= D");
  CosetStructure out;
  out.search_bound = D;
  std::set<FqPoly> covered;
  const std::uint64_t q = f->order();
  for (int e = 0; e <= max_mod_deg; ++e) {
    const std::uint64_t qe = power(q, e);
    for (std::uint64_t qi = qe; qi < 2 * qe; ++qi) {
      const FqPoly Q = FqPoly::from_index(f, qi);
      for (std::uint64_t di = 0; di < qe; ++di) {
        Coset c{FqPoly::from_index(f, di), Q};
        if (!S.count(c.d)) continue;
        if (std::any_of(out.cosets.begin(), out.cosets.end(), [&](const Coset& a) { return c.inside(a); })) continue;
        std::size_t members = 0;
        bool fresh = false;
        bool all_in = for_each_member(f, c, D, [&](const FqPoly& P) {
          ++members;
          if (!covered.count(P)) fresh = true;
          return S.count(P) > 0;
        });
        if (!all_in || members < 2 || !fresh) continue;
        for_each_member(f, c, D, [&](FqPoly P) {
          covered.insert(std::move(P));
          return true;
        });
        out.cosets.push_back(std::move(c));
      }
    }
  }
  for (const auto& P : S)
    if (!covered.count(P)) out.isolated.push_back(P);
  if (out.expand(f, D) != S) throw std::logic_error("coset structure does not re-expand to S");
  return out;
}

Stability check_stability(const Variety& V, const CyclicModule& m, int D, int max_mod_deg, unsigned threads) {
  if (D < 1) throw std::invalid_argument("D must be at least 1");
  const FieldPtr& f = m.action.field();
  auto at = [&](int d) {
    return infer_cosets(intersect(V, m, d, threads), f, d, std::min(max_mod_deg, d - 1));
  };
  CosetStructure a = at(D);
  CosetStructure b = at(D + 1);
  const bool stable = a.cosets == b.cosets;
  return {stable, std::move(a), std::move(b)};
}

bool stronger_result_echo(const std::set<FqPoly>& S, const CosetStructure& c, int D, std::size_t threshold) {
  if (S.size() < threshold || D < 4) return true;
  return !c.cosets.empty();
}

// ---------------------------------------------------- analytic verification

namespace {

bool in_balls(const AnalyticContext& ctx, const std::vector<LocalElem>& y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!ctx.ball(i).contains(y[i])) return false;
  return true;
}

std::vector<LocalElem> diff(const std::vector<LocalElem>& a, const std::vector<LocalElem>& b) {
  std::vector<LocalElem> r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

ResidualSample residuals(const Variety& Vd, const std::vector<LocalElem>& z, Valuation floor, std::string kind,
                         std::string label) {
  ResidualSample s{std::move(kind), std::move(label), {}, {}, true};
  for (const auto& eq : Vd.equations) {
    const LocalElem r = eq.eval(z);
    s.valuations.push_back(r.is_exact_zero() ? kInfinity : r.valuation());
    s.precisions.push_back(r.precision());
    if (!r.is_exact_zero() && r.valuation() < floor) s.passed = false;
  }
  return s;
}

bool exact_is_cheap(const ProductAction& act, const std::vector<RatFunc>& x, int deg) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    double growth = std::pow(static_cast<double>(act.field()->order()), act[i].rank() * deg);
    double size = std::max(x[i].num().degree(), x[i].den().degree()) + 1;
    if (growth * size > 4096) return false;
  }
  return true;
}

}  // namespace

CosetVerification verify_coset_analytic(const Variety& V, const CyclicModule& m, const Coset& coset, const Place& v,
                                        int N, int search_bound, const VerifyOptions& opt) {
  const ProductAction& act = m.action;
  const std::size_t g = act.dimension();
  if (V.g != static_cast<int>(g)) throw std::invalid_argument("variety dimension does not match the module");
  if (!coset.Q.is_monic()) throw std::invalid_argument("coset modulus must be monic");
  for (const auto& mod : act.modules())
    if (!good_reduction(mod, v)) throw Error("bad reduction at " + v.to_string());
  for (std::size_t i = 0; i < g; ++i)
    if (valuation(v, m.generator[i]) < 0)
      throw Error("generator coordinate x_" + std::to_string(i + 1) + " not integral at " + v.to_string());
  const Valuation floor = opt.floor.value_or(N - 5);
  const AnalyticContext ctx(act, v, N, opt.terms);
  const Variety Vd = translate_by(V, act.act(coset.d, m.generator));

  // Witness: Q t^k in the ball, or by pigeonhole Q (t^k - t^j).
  std::vector<LocalElem> x;
  for (const auto& c : m.generator) x.push_back(ctx.embed(c));
  std::vector<std::vector<LocalElem>> phi;
  for (const auto& mod : act.modules()) phi.push_back(embedded_phi_t(mod, v, N));
  const FieldPtr& f = act.field();
  const FqPoly t = FqPoly::t(f);
  std::vector<std::vector<LocalElem>> ys{act.act(coset.Q, x)};
  std::optional<FqPoly> P0;
  std::vector<LocalElem> y0;
  std::string rule;
  for (int k = 0; k <= opt.witness_cap && !P0; ++k) {
    if (k > 0) {
      std::vector<LocalElem> next;
      for (std::size_t i = 0; i < g; ++i) next.push_back(apply_phi_t(phi[i], ys.back()[i]));
      ys.push_back(std::move(next));
    }
    if (in_balls(ctx, ys[k])) {
      P0 = coset.Q * t.pow(k);
      y0 = ys[k];
      rule = "Q*t^k";
      break;
    }
    for (int j = 0; j < k; ++j) {
      auto d = diff(ys[k], ys[j]);
      if (in_balls(ctx, d)) {
        P0 = coset.Q * (t.pow(k) - t.pow(j));
        y0 = std::move(d);
        rule = "Q*(t^k - t^j)";
        break;
      }
    }
  }
  if (!P0) throw Error("no analytic witness");
  // Recompute exactly when the witness is small; torsion coordinates then
  // give exact zeros.
  if (exact_is_cheap(act, m.generator, P0->degree())) {
    y0.clear();
    for (const auto& c : act.act(*P0, m.generator)) y0.push_back(ctx.embed(c));
    if (!in_balls(ctx, y0)) throw std::logic_error("witness left the ball on exact recomputation");
  }

  // Lead coordinate: largest log, so every |lambda_i| <= 1.
  std::vector<LocalElem> logs;
  for (std::size_t i = 0; i < g; ++i) logs.push_back(ctx.log(i, y0[i]));
  const auto order = normalize_lead(logs);
  std::vector<DrinfeldModule> mods;
  std::vector<LocalElem> yp;
  for (auto i : order) {
    mods.push_back(act[i]);
    yp.push_back(y0[i]);
  }
  const AnalyticContext pctx(ProductAction(mods), v, N, opt.terms);
  const auto lambdas = lambdas_from_point(pctx, yp);
  // A coordinate with the lead's module and generator has lambda = 1 and
  // Z-coordinate u exactly.
  std::vector<bool> copy(g, false);
  for (std::size_t k = 1; k < g; ++k)
    copy[k] = mods[k] == mods[0] && m.generator[order[k]] == m.generator[order[0]];

  const auto z_at = [&](const LocalElem& u) {
    auto z = zu(pctx, lambdas, u);
    std::vector<LocalElem> out(z.size(), LocalElem::zero(v));
    for (std::size_t k = 0; k < z.size(); ++k) out[order[k]] = copy[k] ? u : z[k];
    return out;
  };

  CosetVerification rep{coset, v, N, floor, ctx.min_valuation(), true, *P0, rule, order, lambdas, {}, true};
  for (std::size_t i = 0; i < g; ++i) rep.tail_increasing = rep.tail_increasing && ctx.ball(i).tail_increasing;

  // Orbit samples P = P0 * (t^e + 1) of degree >= search_bound.
  const int s = std::max(0, search_bound - P0->degree());
  for (int k = 0; k < opt.orbit_samples; ++k) {
    const FqPoly R = t.pow(s + k) + FqPoly::one(f);
    const LocalElem u = dlang::act(mods[0], R, yp[0]);
    rep.samples.push_back(residuals(Vd, z_at(u), floor, "orbit", (*P0 * R).to_string()));
  }

  // Random u = pi^m * w with w integral.
  std::mt19937_64 rng(opt.seed);
  const Valuation mv = ctx.min_valuation();
  const int width = N * v.degree();
  for (int k = 0; k < opt.random_samples; ++k) {
    std::vector<Fq> w(static_cast<std::size_t>(width));
    for (auto& c : w) c = f->element(static_cast<int>(rng() % static_cast<std::uint64_t>(f->order())));
    FqPoly unit(f, std::move(w));
    if ((unit % v.uniformizer()).is_zero()) unit = unit + FqPoly::one(f);
    const LocalElem u = LocalElem::from_parts(v, mv, unit, mv + N);
    rep.samples.push_back(residuals(Vd, z_at(u), floor, "random", u.digit_string()));
  }
  rep.passed = std::all_of(rep.samples.begin(), rep.samples.end(), [](const auto& r) { return r.passed; });
  return rep;
}

// ------------------------------------------------------------- rank one

std::vector<std::vector<RatFunc>> torsion_subgroup(const ProductAction& action,
                                                   const std::vector<std::vector<RatFunc>>& gens, int deg_bound) {
  const FieldPtr& f = action.field();
  const std::size_t g = action.dimension();
  std::set<std::vector<RatFunc>> group{std::vector<RatFunc>(g, RatFunc(f))};
  for (const auto& T : gens) {
    if (T.size() != g) throw std::invalid_argument("torsion generator dimension does not match the action");
    FqPoly ann = FqPoly::one(f);
    for (std::size_t i = 0; i < g; ++i) {
      auto a = is_torsion(action[i], T[i], deg_bound);
      if (!a) throw Error("unverified torsion generator");
      ann = ann * *a / gcd(ann, *a);
    }
    std::set<std::vector<RatFunc>> multiples;
    const CyclicModule cyc(action, T);
    for (auto e : OrbitView(cyc, ann.degree())) multiples.insert(std::move(e.point));
    std::set<std::vector<RatFunc>> next;
    for (const auto& a : group)
      for (const auto& b : multiples) {
        std::vector<RatFunc> s(g, RatFunc(f));
        for (std::size_t i = 0; i < g; ++i) s[i] = a[i] + b[i];
        next.insert(std::move(s));
        if (next.size() > (1u << 16)) throw Error("torsion subgroup too large");
      }
    group = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<TorsionTranslate> intersect_rank_one(const Variety& V, const RankOneModule& M, int D, int max_mod_deg,
                                                 int torsion_deg_bound, unsigned threads) {
  if (D < 1) throw std::invalid_argument("D must be at least 1");
  const auto gammas = torsion_subgroup(M.free_part.action, M.torsion_generators, torsion_deg_bound);
  std::vector<TorsionTranslate> out;
  for (const auto& gamma : gammas) {
    auto S = intersect(translate_by(V, gamma), M.free_part, D, threads);
    auto c = infer_cosets(S, M.free_part.action.field(), D, max_mod_deg);
    out.push_back({gamma, std::move(S), std::move(c)});
  }
  return out;
}

}  // namespace dlang
