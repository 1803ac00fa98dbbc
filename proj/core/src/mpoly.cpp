#include "dlang/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dlang {

MPoly::MPoly(const FieldPtr& f, int nvars) : field_(f), nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("a polynomial needs at least one variable");
}

MPoly MPoly::constant(const FieldPtr& f, int nvars, const RatFunc& c) {
  MPoly p(f, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(const FieldPtr& f, int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  MPoly p(f, nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.add_term(e, RatFunc::one(f));
  return p;
}

void MPoly::add_term(const Exponent& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

static void require_compatible(const MPoly& a, const MPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials in different numbers of variables");
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  require_compatible(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_compatible(a, b);
  MPoly r(a.field_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  MPoly r = constant(field_, nvars_, RatFunc::one(field_));
  MPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

MPoly MPoly::scaled(const RatFunc& c) const {
  MPoly r(field_, nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

RatFunc MPoly::eval(const std::vector<RatFunc>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point dimension does not match polynomial");
  RatFunc acc(field_);
  for (const auto& [e, c] : terms_) {
    RatFunc term = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * x[i].pow(e[i]);
    acc += term;
  }
  return acc;
}

namespace {
LocalElem local_pow(const LocalElem& x, int e) {
  LocalElem r = x;
  for (int i = 1; i < e; ++i) r = r * x;
  return r;
}
}  // namespace

LocalElem MPoly::eval(const std::vector<LocalElem>& x) const {
  if (static_cast<int>(x.size()) != nvars_ || x.empty())
    throw std::invalid_argument("point dimension does not match polynomial");
  const Place& v = x.front().place();
  // Enough digits that no coefficient limits the precision of a term.
  Valuation digits = 1;
  for (const auto& xi : x)
    if (!xi.is_exact_zero()) digits = std::max({digits, xi.relative_precision(), xi.precision()});
  digits = std::clamp<Valuation>(digits, 1, 1 << 20);
  LocalElem acc = LocalElem::zero(v);
  for (const auto& [e, c] : terms_) {
    LocalElem term = embed(v, c, static_cast<int>(digits));
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * local_pow(x[i], e[i]);
    acc += term;
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponent, RatFunc>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(i + 1);
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    std::string cs = t->second.to_string();
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
      os << (wrap ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace dlang
