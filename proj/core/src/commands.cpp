#include "dlang/commands.hpp"

#include <json.hpp>
#include <sstream>

#include "dlang/expr.hpp"
#include "dlang/problem.hpp"

namespace dlang {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json valuation_json(Valuation v) { return v >= kInfinity ? json("inf") : json(v); }

std::string provenance(int precision) { return "precision-" + std::to_string(precision); }

json local_json(const LocalElem& x, int precision) {
  json j;
  j["digits"] = x.digit_string();
  j["valuation"] = valuation_json(x.is_exact_zero() ? kInfinity : x.valuation());
  j["precision"] = valuation_json(x.precision());
  j["provenance"] = x.is_exact_zero() ? "exact" : provenance(precision);
  return j;
}

std::string vector_text(const std::vector<RatFunc>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

json vector_json(const std::vector<RatFunc>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Place resolve_place(const ProblemSpec& spec, const CommonOptions& opt) {
  if (!opt.place) return spec.place();
  if (*opt.place == "inf") return Place::infinite(spec.field);
  try {
    RatFunc pi = parse_ratfunc(spec.field, *opt.place);
    if (!pi.den().is_one()) throw std::invalid_argument("a place is given by a polynomial or 'inf'");
    return Place::finite(pi.num());
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --place: ") + e.what());
  }
}

int resolve_precision(const ProblemSpec& spec, const CommonOptions& opt) {
  const int n = opt.precision.value_or(spec.bounds.precision);
  if (n < 1) throw UsageError("--precision must be positive");
  return n;
}

RatFunc parse_flag_value(const ProblemSpec& spec, const std::string& flag, const std::string& text) {
  try {
    return parse_ratfunc(spec.field, text);
  } catch (const ParseError& e) {
    throw UsageError("invalid " + flag + ": " + e.what());
  }
}

json config_json(const std::string& command, const std::filesystem::path& file, const ProblemSpec& spec) {
  json j;
  j["tool"] = {{"name", "dlang"}, {"version", kVersion}};
  j["command"] = command;
  json c;
  c["file"] = file.generic_string();
  c["field"] = spec.field->describe();
  json mods = json::array();
  for (const auto& p : spec.phi) mods.push_back(p.to_string());
  c["modules"] = mods;
  if (!spec.point.empty()) c["point"] = vector_json(spec.point);
  if (!spec.torsion.empty()) {
    json t = json::array();
    for (const auto& g : spec.torsion) t.push_back(vector_json(g));
    c["torsion"] = t;
  }
  if (!spec.equations.empty()) {
    json v = json::array();
    for (const auto& f : spec.equations) v.push_back(f.to_string());
    c["variety"] = v;
  }
  j["config"] = c;
  return j;
}

void config_text(std::ostream& os, const json& j) {
  os << "dlang " << j["tool"]["version"].get<std::string>() << " " << j["command"].get<std::string>() << "\n";
  for (auto it = j["config"].begin(); it != j["config"].end(); ++it) {
    const auto& v = it.value();
    if (it.key() == "modules") {
      for (std::size_t i = 0; i < v.size(); ++i)
        os << "module " << i + 1 << ": phi_t = " << v[i].get<std::string>() << "\n";
    } else if (it.key() == "point") {
      os << "point: (";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get<std::string>();
      os << ")\n";
    } else if (it.key() == "torsion") {
      for (const auto& g : v) {
        os << "torsion generator: (";
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i].get<std::string>();
        os << ")\n";
      }
    } else if (it.key() == "variety") {
      for (const auto& f : v) os << "variety: " << f.get<std::string>() << " = 0\n";
    } else {
      os << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

template <class F>
CommandResult run(F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    return {exit_code::usage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {exit_code::failure, "", std::string("error: ") + e.what() + "\n"};
  }
}

CommandResult emit(const json& j, bool as_json, int code, const std::string& text) {
  return {code, as_json ? j.dump(2) + "\n" : text, ""};
}

// ------------------------------------------------------------------ check

std::string check_text(const json& j) {
  std::ostringstream os;
  config_text(os, j);
  const auto& r = j["result"];
  for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  for (const auto& m : r["modules"]) {
    os << "module " << m["index"].get<int>() << ": rank " << m["rank"].get<int>() << ", "
       << m["reduction"].get<std::string>() << " reduction";
    if (m["ball"].is_null()) {
      os << ", no certified ball (" << m["ball_note"].get<std::string>() << ")\n";
    } else {
      const auto& b = m["ball"];
      os << ", ball v(x) >= " << b["min_valuation"].dump() << " certified to order " << b["order"].dump()
         << (b["tail_increasing"].get<bool>() ? " (tail heuristic)" : " (tail heuristic, increments not increasing)")
         << "\n";
    }
  }
  for (const auto& c : r["point"]) {
    os << "x" << c["coordinate"].get<int>() << " = " << c["value"].get<std::string>() << ": ";
    if (c["annihilator"].is_null())
      os << "no annihilator of degree <= " << c["deg_bound"].get<int>();
    else
      os << "torsion, annihilator " << c["annihilator"].get<std::string>();
    os << "; height estimate (n = 3) " << c["height_estimate"].get<std::string>() << "\n";
  }
  for (const auto& t : r["torsion"]) {
    os << "torsion generator " << t["index"].get<int>() << ": annihilators";
    for (const auto& a : t["annihilators"]) os << " " << a.get<std::string>();
    os << "\n";
  }
  os << "result: ok\n";
  return os.str();
}

}  // namespace

CommandResult cmd_check(const std::filesystem::path& file, const CheckOptions& opt) {
  return run([&] {
    const ProblemSpec spec = load_problem(file);
    const Place v = resolve_place(spec, opt);
    const auto mods = spec.modules();
    json j = config_json("check", file, spec);
    j["config"]["place"] = v.to_string();
    j["config"]["terms"] = spec.bounds.terms;
    j["config"]["deg_bound"] = spec.bounds.deg_bound;
    json r;
    r["place"] = v.to_string();
    json warnings = json::array();
    if (v.is_infinite()) warnings.push_back("every Drinfeld module has bad reduction at the infinite place");
    json mj = json::array();
    for (std::size_t i = 0; i < mods.size(); ++i) {
      json m;
      m["index"] = i + 1;
      m["rank"] = mods[i].rank();
      const bool good = good_reduction(mods[i], v);
      m["reduction"] = good ? "good" : "bad";
      if (good || v.is_infinite()) {
        const ConvergenceBall b = ball(mods[i], v, spec.bounds.terms);
        m["ball"] = {{"min_valuation", b.min_valuation},
                     {"order", b.order},
                     {"tail_increasing", b.tail_increasing},
                     {"provenance", "exact valuations"}};
      } else {
        m["ball"] = nullptr;
        m["ball_note"] = "bad reduction";
      }
      mj.push_back(m);
    }
    r["warnings"] = warnings;
    r["modules"] = mj;
    json pj = json::array();
    for (std::size_t i = 0; i < spec.point.size(); ++i) {
      json c;
      c["coordinate"] = i + 1;
      c["value"] = spec.point[i].to_string();
      c["deg_bound"] = spec.bounds.deg_bound;
      auto ann = is_torsion(mods[i], spec.point[i], spec.bounds.deg_bound);
      c["annihilator"] = ann ? json(ann->to_string()) : json(nullptr);
      try {
        const Rational h = canonical_height_estimate(mods[i], spec.point[i], 3);
        std::ostringstream hs;
        hs << h.numerator();
        if (h.denominator() != 1) hs << "/" << h.denominator();
        c["height_estimate"] = hs.str();
      } catch (const std::overflow_error&) {
        c["height_estimate"] = "n/a";
      }
      pj.push_back(c);
    }
    r["point"] = pj;
    json tj = json::array();
    for (std::size_t k = 0; k < spec.torsion.size(); ++k) {
      json t;
      t["index"] = k + 1;
      json anns = json::array();
      for (std::size_t i = 0; i < mods.size(); ++i) {
        auto ann = is_torsion(mods[i], spec.torsion[k][i], spec.bounds.deg_bound);
        if (!ann) throw Error("unverified torsion generator");
        anns.push_back(ann->to_string());
      }
      t["annihilators"] = anns;
      tj.push_back(t);
    }
    r["torsion"] = tj;
    j["result"] = r;
    return emit(j, opt.json, exit_code::ok, check_text(j));
  });
}

// -------------------------------------------------------------- intersect

namespace {

json structure_json(const CosetStructure& c) {
  json cos = json::array();
  for (const auto& k : c.cosets) cos.push_back({{"d", k.d.to_string()}, {"Q", k.Q.to_string()}});
  json iso = json::array();
  for (const auto& p : c.isolated) iso.push_back(p.to_string());
  return {{"cosets", cos}, {"isolated", iso}, {"search_bound", c.search_bound}};
}

json verification_json(const CosetVerification& r) {
  json j;
  j["coset"] = {{"d", r.coset.d.to_string()}, {"Q", r.coset.Q.to_string()}};
  j["place"] = r.place.to_string();
  j["precision"] = r.precision;
  j["floor"] = r.floor;
  j["min_valuation"] = r.min_valuation;
  j["tail"] = r.tail_increasing ? "heuristic" : "heuristic, increments not increasing";
  j["witness"] = r.witness.to_string();
  j["witness_rule"] = r.witness_rule;
  json order = json::array();
  for (auto i : r.order) order.push_back(i + 1);
  j["coordinate_order"] = order;
  json lam = json::array();
  for (std::size_t k = 0; k < r.lambdas.size(); ++k) {
    json l = local_json(r.lambdas[k], r.precision);
    l["coordinate"] = r.order[k + 1] + 1;
    lam.push_back(l);
  }
  j["lambdas"] = lam;
  json samples = json::array();
  for (const auto& s : r.samples) {
    json vals = json::array(), precs = json::array();
    for (auto v : s.valuations) vals.push_back(valuation_json(v));
    for (auto p : s.precisions) precs.push_back(valuation_json(p));
    samples.push_back({{"kind", s.kind},
                       {"at", s.label},
                       {"residual_valuations", vals},
                       {"residual_precisions", precs},
                       {"passed", s.passed}});
  }
  j["samples"] = samples;
  j["passed"] = r.passed;
  return j;
}

std::string intersect_text(const json& j) {
  std::ostringstream os;
  config_text(os, j);
  const auto& r = j["result"];
  for (const auto& g : r["translates"]) {
    os << "\ntorsion translate gamma = (";
    for (std::size_t i = 0; i < g["gamma"].size(); ++i) os << (i ? ", " : "") << g["gamma"][i].get<std::string>();
    os << ")\n";
    const auto& S = g["S"];
    os << "  S [exact]: " << S["size"].get<std::size_t>() << " of " << S["enumerated"].get<std::uint64_t>()
       << " polynomials with deg P < " << S["D"].get<int>() << "\n";
    if (!S["members"].empty()) {
      os << "   ";
      for (const auto& p : S["members"]) os << " " << p.get<std::string>() << ";";
      if (S["truncated"].get<bool>()) os << " ...";
      os << "\n";
    }
    const auto& c = g["structure"];
    os << "  cosets [exact]:";
    if (c["cosets"].empty()) os << " none";
    for (const auto& k : c["cosets"]) os << " " << k["d"].get<std::string>() << " + (" << k["Q"].get<std::string>() << ")";
    os << "\n  isolated [exact]:";
    if (c["isolated"].empty()) os << " none";
    for (const auto& p : c["isolated"]) os << " " << p.get<std::string>();
    os << "\n  stability (D + 1): " << (g["stable"].get<bool>() ? "stable" : "unstable - increase D") << "\n";
    if (!g["echo"].get<bool>()) os << "  note: large S without a coset (counterexample candidate)\n";
    if (!g.contains("verification")) continue;
    for (const auto& v : g["verification"]) {
      os << "  verify " << v["coset"]["d"].get<std::string>() << " + (" << v["coset"]["Q"].get<std::string>()
         << ") at " << v["place"].get<std::string>() << ":";
      if (v.contains("error")) {
        os << " FAILED (" << v["error"].get<std::string>() << ")\n";
        continue;
      }
      os << " precision " << v["precision"].dump() << ", floor " << v["floor"].dump() << ", ball v >= "
         << v["min_valuation"].dump() << ", tail " << v["tail"].get<std::string>() << "\n";
      os << "    witness P0 = " << v["witness"].get<std::string>() << " [" << v["witness_rule"].get<std::string>()
         << "], coordinate order";
      for (const auto& i : v["coordinate_order"]) os << " " << i.dump();
      os << "\n";
      for (const auto& l : v["lambdas"])
        os << "    lambda_" << l["coordinate"].dump() << " [" << l["provenance"].get<std::string>()
           << "]: " << l["digits"].get<std::string>() << "\n";
      for (const auto& s : v["samples"]) {
        os << "    " << s["kind"].get<std::string>() << " " << s["at"].get<std::string>() << ": residual v =";
        for (const auto& x : s["residual_valuations"]) os << " " << (x.is_string() ? "exact" : x.dump());
        os << (s["passed"].get<bool>() ? "  PASS" : "  FAIL") << "\n";
      }
      os << "    " << (v["passed"].get<bool>() ? "verified" : "FAILED") << "\n";
    }
  }
  os << "\nresult: " << r["status"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace

CommandResult cmd_intersect(const std::filesystem::path& file, const IntersectOptions& opt) {
  return run([&] {
    const ProblemSpec spec = load_problem(file);
    const int D = opt.degree.value_or(spec.bounds.D);
    if (D < 1) throw UsageError("--degree must be at least 1");
    if (opt.modulus_cap && *opt.modulus_cap < 0) throw UsageError("--modulus-cap must be non-negative");
    const int requested_cap = opt.modulus_cap.value_or(spec.bounds.modulus_cap());
    const auto cap_for = [&](int d) { return std::min(requested_cap, d - 1); };
    const Place v = resolve_place(spec, opt);
    const int N = resolve_precision(spec, opt);
    const unsigned threads = std::max(1u, opt.threads);

    const CyclicModule M = spec.cyclic();
    const Variety V = spec.variety();
    const FieldPtr& F = spec.field;

    json j = config_json("intersect", file, spec);
    j["config"]["D"] = D;
    j["config"]["modulus_cap"] = cap_for(D);
    j["config"]["verify"] = opt.verify;
    if (opt.verify) {
      j["config"]["place"] = v.to_string();
      j["config"]["precision"] = N;
      j["config"]["terms"] = spec.bounds.terms;
      j["config"]["samples"] = spec.bounds.samples;
    }
    if (!spec.torsion.empty()) j["config"]["deg_bound"] = spec.bounds.deg_bound;

    std::vector<std::vector<RatFunc>> gammas{std::vector<RatFunc>(M.generator.size(), RatFunc(F))};
    if (!spec.torsion.empty()) gammas = torsion_subgroup(M.action, spec.torsion, spec.bounds.deg_bound);

    bool all_stable = true;
    bool all_verified = true;
    json translates = json::array();
    for (const auto& gamma : gammas) {
      const Variety Vg = translate_by(V, gamma);
      const auto S = intersect(Vg, M, D, threads);
      const auto c = infer_cosets(S, F, D, cap_for(D));
      const auto c1 = infer_cosets(intersect(Vg, M, D + 1, threads), F, D + 1, cap_for(D + 1));
      const bool stable = c.cosets == c1.cosets;
      all_stable = all_stable && stable;

      json g;
      g["gamma"] = vector_json(gamma);
      json members = json::array();
      std::size_t shown = 0;
      for (const auto& P : S) {
        if (shown++ == 64) break;
        members.push_back(P.to_string());
      }
      g["S"] = {{"provenance", "exact"},
                {"D", D},
                {"enumerated", OrbitView(M, D).size()},
                {"size", S.size()},
                {"members", members},
                {"truncated", S.size() > 64}};
      g["structure"] = structure_json(c);
      g["structure_next"] = structure_json(c1);
      g["stable"] = stable;
      g["echo"] = stronger_result_echo(S, c, D);
      if (opt.verify) {
        json ver = json::array();
        VerifyOptions vo;
        vo.orbit_samples = spec.bounds.samples;
        vo.random_samples = spec.bounds.samples;
        vo.terms = spec.bounds.terms;
        for (const auto& k : c.cosets) {
          try {
            const auto rep = verify_coset_analytic(Vg, M, k, v, N, D, vo);
            all_verified = all_verified && rep.passed;
            ver.push_back(verification_json(rep));
          } catch (const Error& e) {
            all_verified = false;
            ver.push_back({{"coset", {{"d", k.d.to_string()}, {"Q", k.Q.to_string()}}},
                           {"place", v.to_string()},
                           {"error", e.what()},
                           {"passed", false}});
          }
        }
        g["verification"] = ver;
      }
      translates.push_back(g);
    }
    const int code = !all_stable ? exit_code::unstable : !all_verified ? exit_code::residual : exit_code::ok;
    json r;
    r["translates"] = translates;
    r["status"] = code == exit_code::ok         ? "ok"
                  : code == exit_code::unstable ? "unstable - increase D"
                                                : "verification residual failure";
    j["result"] = r;
    return emit(j, opt.json, code, intersect_text(j));
  });
}

// ----------------------------------------------------------------- explog

CommandResult cmd_explog(const std::filesystem::path& file, const ExplogOptions& opt) {
  return run([&] {
    const ProblemSpec spec = load_problem(file);
    const int terms = opt.terms.value_or(4);
    if (terms < 0) throw UsageError("--terms must be non-negative");
    const auto mods = spec.modules();
    json j = config_json("explog", file, spec);
    j["config"]["terms"] = terms;
    std::optional<RatFunc> at;
    if (opt.at) at = parse_flag_value(spec, "--at", *opt.at);
    const Place v = resolve_place(spec, opt);
    const int N = resolve_precision(spec, opt);
    if (at) {
      j["config"]["at"] = at->to_string();
      j["config"]["place"] = v.to_string();
      j["config"]["precision"] = N;
      j["config"]["series_terms"] = spec.bounds.terms;
    }
    json mj = json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const auto e = exp_coeffs(mods[i], terms);
      const auto l = log_coeffs(mods[i], terms);
      json m;
      m["index"] = i + 1;
      json ec = json::array(), lc = json::array();
      for (const auto& c : e.coeffs) ec.push_back(c.to_string());
      for (const auto& c : l.coeffs) lc.push_back(c.to_string());
      m["exp"] = ec;
      m["log"] = lc;
      m["provenance"] = "exact";
      mj.push_back(m);
    }
    json evals = json::array();
    if (at) {
      const AnalyticContext ctx(ProductAction(mods), v, N, spec.bounds.terms);
      const LocalElem x = ctx.embed(*at);
      if (!x.is_exact_zero() && x.valuation() < ctx.min_valuation())
        throw BallError(at->to_string() + " is outside the convergence ball v(x) >= " +
                        std::to_string(ctx.min_valuation()) + " at " + v.to_string());
      const Valuation floor = N - 5;
      const FieldPtr& F = spec.field;
      for (std::size_t i = 0; i < mods.size(); ++i) {
        json ej;
        ej["index"] = i + 1;
        ej["ball_min_valuation"] = ctx.ball(i).min_valuation;
        ej["x"] = local_json(x, N);
        const LocalElem ex = ctx.exp(i, x);
        const LocalElem lx = ctx.log(i, x);
        ej["exp"] = local_json(ex, N);
        ej["log"] = local_json(lx, N);
        json res = json::array();
        for (const FqPoly& a : {FqPoly::t(F), FqPoly::t(F) + FqPoly::one(F)}) {
          const LocalElem r_log = ctx.log(i, ctx.embed(act(mods[i], a, *at))) - local_scale(lx, RatFunc(a));
          const LocalElem r_exp = ctx.exp(i, local_scale(x, RatFunc(a))) - act(mods[i], a, ex);
          for (const auto& [name, r] : {std::pair{"log(phi_a(x)) - a log(x)", r_log},
                                        std::pair{"exp(a x) - phi_a(exp(x))", r_exp}}) {
            const Valuation rv = r.is_exact_zero() ? kInfinity : r.valuation();
            res.push_back({{"a", a.to_string()},
                           {"identity", name},
                           {"residual_valuation", valuation_json(rv)},
                           {"floor", floor},
                           {"passed", rv >= floor}});
          }
        }
        ej["functional_equations"] = res;
        evals.push_back(ej);
      }
    }
    json r;
    r["modules"] = mj;
    if (at) r["evaluation"] = evals;
    j["result"] = r;

    config_text(os, j);
    bool ok = true;
    for (const auto& m : mj) {
      os << "module " << m["index"].dump() << " [exact]\n";
      for (std::size_t n = 0; n < m["exp"].size(); ++n)
        os << "  e_" << n << " = " << m["exp"][n].get<std::string>() << "\n";
      for (std::size_t n = 0; n < m["log"].size(); ++n)
        os << "  l_" << n << " = " << m["log"][n].get<std::string>() << "\n";
    }
    for (const auto& e : evals) {
      os << "module " << e["index"].dump() << " at " << v.to_string() << " [" << provenance(N)
         << "], ball v(x) >= " << e["ball_min_valuation"].dump() << "\n";
      os << "  x      = " << e["x"]["digits"].get<std::string>() << "\n";
      os << "  exp(x) = " << e["exp"]["digits"].get<std::string>() << "\n";
      os << "  log(x) = " << e["log"]["digits"].get<std::string>() << "\n";
      for (const auto& f : e["functional_equations"]) {
        os << "  a = " << f["a"].get<std::string>() << ": " << f["identity"].get<std::string>()
           << ": residual v = " << (f["residual_valuation"].is_string() ? "exact" : f["residual_valuation"].dump())
           << " (floor " << f["floor"].dump() << ")" << (f["passed"].get<bool>() ? "" : "  FAIL") << "\n";
        ok = ok && f["passed"].get<bool>();
      }
    }
    os << "result: " << (ok ? "ok" : "functional equation residual above floor") << "\n";
    return emit(j, opt.json, ok ? exit_code::ok : exit_code::residual, os.str());
  });
}

// ----------------------------------------------------------------- places

CommandResult cmd_places(const std::filesystem::path& file, const PlacesOptions& opt) {
  return run([&] {
    const ProblemSpec spec = load_problem(file);
    std::vector<std::pair<std::string, RatFunc>> values;
    if (opt.at) {
      values.emplace_back("at", parse_flag_value(spec, "--at", *opt.at));
    } else {
      for (std::size_t i = 0; i < spec.point.size(); ++i) values.emplace_back("x" + std::to_string(i + 1), spec.point[i]);
    }
    if (values.empty()) throw UsageError("nothing to analyse: give --at or a [point] section");
    json j = config_json("places", file, spec);
    if (opt.at) j["config"]["at"] = values.front().second.to_string();
    json out = json::array();
    std::ostringstream os;
    config_text(os, j);
    for (const auto& [name, x] : values) {
      json e;
      e["name"] = name;
      e["value"] = x.to_string();
      os << name << " = " << x.to_string() << " [exact]\n";
      if (x.is_zero()) {
        e["support"] = json::array();
        e["note"] = "zero has no support";
        os << "  zero: no support\n";
        out.push_back(e);
        continue;
      }
      json sup = json::array();
      long long total = 0;
      for (const auto& c : support(x)) {
        sup.push_back({{"place", c.place}, {"degree", c.degree}, {"valuation", c.valuation}});
        total += c.degree * c.valuation;
        os << "  v_(" << c.place << ") = " << c.valuation << ", degree " << c.degree << "\n";
      }
      e["support"] = sup;
      e["product_formula_sum"] = total;
      e["product_formula_holds"] = product_formula_check(x);
      os << "  sum deg(v) v(x) = " << total << "\n";
      out.push_back(e);
    }
    j["result"] = {{"values", out}};
    os << "result: ok\n";
    return emit(j, opt.json, exit_code::ok, os.str());
  });
}

// ------------------------------------------------------------------ orbit

CommandResult cmd_orbit(const std::filesystem::path& file, const OrbitOptions& opt) {
  return run([&] {
    const ProblemSpec spec = load_problem(file);
    const int D = opt.degree.value_or(spec.bounds.D);
    if (D < 0) throw UsageError("--degree must be non-negative");
    const CyclicModule M = spec.cyclic();
    json j = config_json("orbit", file, spec);
    j["config"]["D"] = D;
    std::ostringstream os;
    config_text(os, j);
    json pts = json::array();
    for (const auto& e : orbit(M, D)) {
      pts.push_back({{"P", e.P.to_string()}, {"point", vector_json(e.point)}});
      os << "P = " << e.P.to_string() << ": " << vector_text(e.point) << "\n";
    }
    j["result"] = {{"provenance", "exact"}, {"points", pts}};
    os << "result: ok\n";
    return emit(j, opt.json, exit_code::ok, os.str());
  });
}

}  // namespace dlang
