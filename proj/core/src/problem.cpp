#include "dlang/problem.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "dlang/expr.hpp"

namespace dlang {

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line;
  int key_col;
  int value_col;
};

struct Section {
  std::string name;
  int line;
  std::vector<Entry> entries;
};

std::string_view trim(std::string_view s, int* lead = nullptr) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) {
    if (lead) *lead = static_cast<int>(s.size());
    return {};
  }
  std::size_t b = s.find_last_not_of(" \t\r");
  if (lead) *lead = static_cast<int>(a);
  return s.substr(a, b - a + 1);
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    int lead = 0;
    std::string_view s = trim(raw, &lead);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("expected ']'", line_no, lead + static_cast<int>(s.size()) + 1);
      std::string name(trim(s.substr(1, s.size() - 2)));
      for (const auto& sec : out)
        if (sec.name == name) throw ParseError("duplicate section [" + name + "]", line_no, lead + 1);
      out.push_back({name, line_no, {}});
      continue;
    }
    if (out.empty()) throw ParseError("expected a [section] header", line_no, lead + 1);
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, lead + 1);
    std::string key(trim(s.substr(0, eq)));
    if (key.empty()) throw ParseError("missing key before '='", line_no, lead + 1);
    int vlead = 0;
    std::string_view value = trim(s.substr(eq + 1), &vlead);
    const int value_col = lead + static_cast<int>(eq) + 1 + vlead + 1;
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no, value_col);
    out.back().entries.push_back({key, std::string(value), line_no, lead + 1, value_col});
  }
  return out;
}

// Splits at top-level commas; returns (piece, column) pairs.
std::vector<std::pair<std::string, int>> split_list(const Entry& e) {
  std::vector<std::pair<std::string, int>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= e.value.size(); ++i) {
    const char c = i < e.value.size() ? e.value[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      int lead = 0;
      std::string_view piece = trim(std::string_view(e.value).substr(start, i - start), &lead);
      const int col = e.value_col + static_cast<int>(start) + lead;
      if (piece.empty()) throw ParseError("empty list element", e.line, col);
      out.emplace_back(std::string(piece), col);
      start = i + 1;
    }
  }
  return out;
}

int parse_int(const Entry& e) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc() || ptr != e.value.data() + e.value.size())
    throw ParseError("expected an integer for '" + e.key + "'", e.line, e.value_col);
  return v;
}

int positive(const Entry& e, int v, int lo = 1) {
  if (v < lo) throw ParseError("'" + e.key + "' must be at least " + std::to_string(lo), e.line, e.value_col);
  return v;
}

[[noreturn]] void unknown_key(const Entry& e, const std::string& section) {
  throw ParseError("unknown key '" + e.key + "' in [" + section + "]", e.line, e.key_col);
}

std::string conductor_string(const std::vector<int>& c) {
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    if (c[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0 || c[d] != 1) os << c[d];
    if (d > 0) os << (c[d] != 1 ? "*" : "") << "x" << (d > 1 ? "^" + std::to_string(d) : "");
  }
  return os.str();
}

std::vector<RatFunc> parse_vector(const FieldPtr& f, const Entry& e, std::size_t g, const std::string& what) {
  std::vector<RatFunc> out;
  for (const auto& [piece, col] : split_list(e)) out.push_back(parse_ratfunc(f, piece, e.line, col));
  if (out.size() != g)
    throw ParseError(what + " has " + std::to_string(out.size()) + " coordinates, expected " + std::to_string(g),
                     e.line, e.value_col);
  return out;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  const auto sections = split_sections(text);
  ProblemSpec spec;
  const Section* field = nullptr;
  std::map<int, const Section*> modules;
  const Section *point = nullptr, *torsion = nullptr, *variety = nullptr, *bounds = nullptr;
  for (const auto& s : sections) {
    if (s.name == "field") {
      field = &s;
    } else if (s.name == "point") {
      point = &s;
    } else if (s.name == "torsion") {
      torsion = &s;
    } else if (s.name == "variety") {
      variety = &s;
    } else if (s.name == "bounds") {
      bounds = &s;
    } else if (s.name.rfind("module.", 0) == 0) {
      const std::string idx = s.name.substr(7);
      int i = 0;
      auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
      if (idx.empty() || ec != std::errc() || ptr != idx.data() + idx.size() || i < 1)
        throw ParseError("module sections are named [module.1], [module.2], ...", s.line, 1);
      modules[i] = &s;
    } else {
      throw ParseError("unknown section [" + s.name + "]", s.line, 1);
    }
  }

  // [field]
  if (!field) throw ParseError("missing [field] section", 1, 1);
  const Entry* p_entry = nullptr;
  const Entry* cond_entry = nullptr;
  std::optional<std::vector<int>> conductor;
  for (const auto& e : field->entries) {
    if (e.key == "p") {
      spec.p = positive(e, parse_int(e), 2);
      p_entry = &e;
    } else if (e.key == "k") {
      spec.k = positive(e, parse_int(e));
    } else if (e.key == "conductor") {
      cond_entry = &e;
    } else {
      unknown_key(e, "field");
    }
  }
  if (!p_entry) throw ParseError("[field] needs p", field->line, 1);
  const Entry& where = cond_entry ? *cond_entry : *p_entry;
  try {
    if (cond_entry) conductor = parse_conductor(spec.p, cond_entry->value, cond_entry->line, cond_entry->value_col);
    spec.field = conductor ? GaloisField::make(spec.p, spec.k, *conductor) : GaloisField::make(spec.p, spec.k);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(ex.what(), where.line, where.value_col);
  }
  const FieldPtr& F = spec.field;

  // [module.i]
  if (modules.empty()) throw ParseError("missing [module.1] section", field->line, 1);
  int expect = 1;
  for (const auto& [i, s] : modules) {
    if (i != expect) throw ParseError("module sections must be numbered 1..g without gaps", s->line, 1);
    ++expect;
    std::optional<TwistedPoly> phi;
    for (const auto& e : s->entries) {
      if (e.key != "phi_t") unknown_key(e, s->name);
      if (phi) throw ParseError("duplicate phi_t", e.line, e.key_col);
      phi = parse_twisted(F, e.value, e.line, e.value_col);
    }
    if (!phi) throw ParseError("[" + s->name + "] needs phi_t", s->line, 1);
    spec.phi.push_back(*phi);
  }
  const std::size_t g = spec.phi.size();

  // [point]
  if (point) {
    std::vector<std::optional<RatFunc>> coords(g);
    for (const auto& e : point->entries) {
      if (e.key == "x") {
        auto v = parse_vector(F, e, g, "point");
        for (std::size_t i = 0; i < g; ++i) {
          if (coords[i]) throw ParseError("coordinate x" + std::to_string(i + 1) + " given twice", e.line, e.key_col);
          coords[i] = v[i];
        }
        continue;
      }
      std::string digits = e.key.size() > 1 && e.key[0] == 'x' ? e.key.substr(e.key[1] == '_' ? 2 : 1) : "";
      int i = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) unknown_key(e, "point");
      if (i < 1 || i > static_cast<int>(g))
        throw ParseError("coordinate " + e.key + " beyond the " + std::to_string(g) + " modules", e.line, e.key_col);
      if (coords[i - 1]) throw ParseError("coordinate " + e.key + " given twice", e.line, e.key_col);
      coords[i - 1] = parse_ratfunc(F, e.value, e.line, e.value_col);
    }
    for (std::size_t i = 0; i < g; ++i) {
      if (!coords[i]) throw ParseError("[point] is missing x" + std::to_string(i + 1), point->line, 1);
      spec.point.push_back(*coords[i]);
    }
  }

  // [torsion]
  if (torsion)
    for (const auto& e : torsion->entries) {
      if (e.key != "gen") unknown_key(e, "torsion");
      spec.torsion.push_back(parse_vector(F, e, g, "torsion generator"));
    }

  // [variety]
  if (variety)
    for (const auto& e : variety->entries) {
      if (e.key != "f") unknown_key(e, "variety");
      spec.equations.push_back(parse_mpoly(F, static_cast<int>(g), e.value, e.line, e.value_col));
    }

  // [bounds]
  spec.bounds.place = FqPoly::t(F) + FqPoly::one(F);
  if (bounds)
    for (const auto& e : bounds->entries) {
      if (e.key == "D") {
        spec.bounds.D = positive(e, parse_int(e));
      } else if (e.key == "max_mod_deg") {
        spec.bounds.max_mod_deg = positive(e, parse_int(e), 0);
      } else if (e.key == "precision") {
        spec.bounds.precision = positive(e, parse_int(e));
      } else if (e.key == "terms") {
        spec.bounds.terms = positive(e, parse_int(e));
      } else if (e.key == "deg_bound") {
        spec.bounds.deg_bound = positive(e, parse_int(e), 0);
      } else if (e.key == "samples") {
        spec.bounds.samples = positive(e, parse_int(e), 0);
      } else if (e.key == "place") {
        if (e.value == "inf") {
          spec.bounds.place.reset();
          continue;
        }
        RatFunc pi = parse_ratfunc(F, e.value, e.line, e.value_col);
        try {
          if (!pi.den().is_one()) throw std::invalid_argument("a place is given by a polynomial or 'inf'");
          Place::finite(pi.num());
        } catch (const std::invalid_argument& ex) {
          throw ParseError(ex.what(), e.line, e.value_col);
        }
        spec.bounds.place = pi.num();
      } else {
        unknown_key(e, "bounds");
      }
    }
  return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::vector<DrinfeldModule> ProblemSpec::modules() const {
  std::vector<DrinfeldModule> out;
  for (const auto& p : phi) out.emplace_back(p);
  return out;
}

ProductAction ProblemSpec::action() const { return ProductAction(modules()); }

Place ProblemSpec::place() const {
  return bounds.place ? Place::finite(*bounds.place) : Place::infinite(field);
}

CyclicModule ProblemSpec::cyclic() const {
  if (point.empty()) throw Error("the problem has no [point] section");
  return CyclicModule(action(), point);
}

Variety ProblemSpec::variety() const {
  if (equations.empty()) throw Error("the problem has no [variety] section");
  return Variety(static_cast<int>(dimension()), equations);
}

std::string serialize(const ProblemSpec& s) {
  std::ostringstream os;
  os << "[field]\np = " << s.p << "\nk = " << s.k << "\n";
  if (s.k > 1) os << "conductor = " << conductor_string(s.field->conductor()) << "\n";
  for (std::size_t i = 0; i < s.phi.size(); ++i)
    os << "\n[module." << i + 1 << "]\nphi_t = " << s.phi[i].to_string() << "\n";
  auto list = [](const std::vector<RatFunc>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out;
  };
  if (!s.point.empty()) {
    os << "\n[point]\n";
    for (std::size_t i = 0; i < s.point.size(); ++i) os << "x" << i + 1 << " = " << s.point[i].to_string() << "\n";
  }
  if (!s.torsion.empty()) {
    os << "\n[torsion]\n";
    for (const auto& T : s.torsion) os << "gen = " << list(T) << "\n";
  }
  if (!s.equations.empty()) {
    os << "\n[variety]\n";
    for (const auto& f : s.equations) os << "f = " << f.to_string() << "\n";
  }
  const Bounds& b = s.bounds;
  os << "\n[bounds]\nD = " << b.D << "\n";
  if (b.max_mod_deg) os << "max_mod_deg = " << *b.max_mod_deg << "\n";
  os << "precision = " << b.precision << "\nplace = " << (b.place ? b.place->to_string() : "inf")
     << "\nterms = " << b.terms << "\ndeg_bound = " << b.deg_bound << "\nsamples = " << b.samples << "\n";
  return os.str();
}

}  // namespace dlang
