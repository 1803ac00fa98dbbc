#include "dlang/twisted.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dlang/algebra.hpp"

namespace dlang {

// ---------------------------------------------------------- TwistedPoly

TwistedPoly::TwistedPoly(const FieldPtr& f, std::vector<RatFunc> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_field(f, c.field());
  trim();
}

void TwistedPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::scalar(const RatFunc& c) { return TwistedPoly(c.field(), {c}); }

TwistedPoly TwistedPoly::tau(const FieldPtr& f, int power) {
  if (power < 0) throw std::invalid_argument("negative tau power");
  std::vector<RatFunc> v(static_cast<std::size_t>(power) + 1, RatFunc(f));
  v.back() = RatFunc::one(f);
  return TwistedPoly(f, std::move(v));
}

RatFunc TwistedPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return RatFunc(field_);
  return c_[i];
}

TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
  std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()), RatFunc(a.field_));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] += a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return TwistedPoly(a.field_, std::move(v));
}

TwistedPoly TwistedPoly::operator-() const {
  TwistedPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) { return a + (-b); }

TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) { return tw_mul(a, b); }

TwistedPoly tw_mul(const TwistedPoly& a, const TwistedPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return TwistedPoly(a.field());
  std::vector<RatFunc> v(static_cast<std::size_t>(a.degree() + b.degree()) + 1, RatFunc(a.field()));
  for (int i = 0; i <= a.degree(); ++i) {
    const RatFunc& ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      const RatFunc& bj = b.coeffs()[j];
      if (bj.is_zero()) continue;
      v[i + j] += ai * bj.frobenius(i);
    }
  }
  return TwistedPoly(a.field(), std::move(v));
}

RatFunc TwistedPoly::apply(const RatFunc& x) const {
  RatFunc acc(field_);
  RatFunc power = x;
  for (int i = 0; i <= degree(); ++i) {
    if (i > 0) power = power.frobenius();
    if (!c_[i].is_zero()) acc += c_[i] * power;
  }
  return acc;
}

LocalElem TwistedPoly::apply(const LocalElem& x) const {
  const int digits = x.is_zero() ? 1 : static_cast<int>(std::min<Valuation>(x.relative_precision(), 1 << 20));
  std::vector<LocalElem> emb;
  emb.reserve(c_.size());
  for (const auto& c : c_) emb.push_back(embed(x.place(), c, digits));
  return apply_phi_t(emb, x);
}

std::string TwistedPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[i].to_string();
    if (i == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") {
      bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
      os << (wrap ? "(" + cs + ")" : cs) << "*";
    }
    os << "tau";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ------------------------------------------------------- DrinfeldModule

DrinfeldModule::DrinfeldModule(TwistedPoly phi_t) : phi_t_(std::move(phi_t)) {
  if (phi_t_.coeff(0) != RatFunc::t(phi_t_.field()))
    throw std::invalid_argument("constant coefficient of phi_t must be t");
  if (phi_t_.degree() < 1) throw std::invalid_argument("phi_t must have tau-degree at least 1");
}

DrinfeldModule DrinfeldModule::carlitz(const FieldPtr& f) {
  return DrinfeldModule(TwistedPoly(f, {RatFunc::t(f), RatFunc::one(f)}));
}

TwistedPoly phi_of(const DrinfeldModule& m, const FqPoly& P) {
  const FieldPtr& f = m.field();
  TwistedPoly acc(f);
  for (int i = P.degree(); i >= 0; --i) {
    acc = tw_mul(m.phi_t(), acc);
    Fq c = P.coeff(i);
    if (c.v != 0) acc = acc + TwistedPoly::scalar(RatFunc::constant(f, c));
  }
  return acc;
}

RatFunc act(const DrinfeldModule& m, const FqPoly& P, const RatFunc& x) {
  RatFunc acc(m.field());
  if (x.is_zero() || P.is_zero()) return acc;
  RatFunc y = x;
  for (int i = 0; i <= P.degree(); ++i) {
    if (i > 0) y = m.phi_t().apply(y);
    Fq c = P.coeff(i);
    if (c.v != 0) acc += y.scaled(c);
  }
  return acc;
}

std::vector<LocalElem> embedded_phi_t(const DrinfeldModule& m, const Place& v, int digits) {
  std::vector<LocalElem> out;
  for (const auto& c : m.phi_t().coeffs()) out.push_back(embed(v, c, digits));
  return out;
}

LocalElem apply_phi_t(const std::vector<LocalElem>& phi_t, const LocalElem& x) {
  LocalElem acc = LocalElem::zero(x.place());
  if (x.is_exact_zero()) return acc;
  LocalElem power = x;
  for (std::size_t i = 0; i < phi_t.size(); ++i) {
    if (i > 0) power = power.frobenius();
    if (phi_t[i].is_exact_zero()) continue;
    acc += phi_t[i] * power;
  }
  return acc;
}

LocalElem act(const DrinfeldModule& m, const FqPoly& P, const LocalElem& x) {
  if (x.is_exact_zero() || P.is_zero()) return LocalElem::zero(x.place());
  const int digits = x.is_zero() ? 1 : static_cast<int>(std::min<Valuation>(x.relative_precision(), 1 << 20));
  const auto phi = embedded_phi_t(m, x.place(), digits);
  LocalElem acc = LocalElem::zero(x.place());
  LocalElem y = x;
  for (int i = 0; i <= P.degree(); ++i) {
    if (i > 0) y = apply_phi_t(phi, y);
    Fq c = P.coeff(i);
    if (c.v != 0) acc += y.scaled(c);
  }
  return acc;
}

// -------------------------------------------------------------- torsion

namespace {

// Solves sum_i c_i cols[i] = rhs over F_q; nullopt when inconsistent.
std::optional<std::vector<Fq>> solve_fq(const FieldPtr& F, const std::vector<std::vector<Fq>>& cols,
                                        const std::vector<Fq>& rhs) {
  const std::size_t n = cols.size();
  const std::size_t rows = rhs.size();
  // Augmented row-major matrix.
  std::vector<std::vector<Fq>> a(rows, std::vector<Fq>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = r < cols[c].size() ? cols[c][r] : Fq{0};
    a[r][n] = rhs[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c].v == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    Fq inv = F->inv(a[row][c]);
    for (auto& e : a[row]) e = F->mul(e, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c].v == 0) continue;
      Fq f = a[r][c];
      for (std::size_t k = 0; k <= n; ++k) a[r][k] = F->sub(a[r][k], F->mul(f, a[row][k]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][n].v != 0) return std::nullopt;
  std::vector<Fq> sol(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = a[i][n];
  return sol;
}

std::vector<Fq> padded(const FqPoly& p, std::size_t len) {
  std::vector<Fq> v(len);
  for (int i = 0; i <= p.degree(); ++i) v[i] = p.coeff(i);
  return v;
}

long long deg_inf(const RatFunc& a) { return a.num().degree() - a.den().degree(); }

// True when the t-power orbit through y provably has unbounded height, so y
// (and whatever it came from) is not torsion: either the top term of phi_t
// dominates at infinity and degrees grow, or y has a pole at a place of good
// reduction.
bool escapes(const DrinfeldModule& m, const RatFunc& y) {
  if (y.is_zero()) return false;
  const auto& a = m.phi_t().coeffs();
  const int r = m.rank();
  const long long q = m.field()->order();
  const long long d = deg_inf(y);
  if (d >= 1 && d < (1LL << 20) / q) {
    long long qi = 1, qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    const long long top = deg_inf(a[r]) + qr * d;
    bool dominant = top > d;
    for (int i = 0; i < r && dominant; ++i, qi *= q)
      if (!a[i].is_zero() && deg_inf(a[i]) + qi * d >= top) dominant = false;
    if (dominant) return true;
  }
  FqPoly bad = a[r].num();
  for (const auto& c : a) bad = bad * c.den();
  FqPoly rest = y.den();
  for (FqPoly g = gcd(rest, bad); g.degree() > 0; g = gcd(rest, bad)) rest = rest / g;
  return rest.degree() > 0;
}

}  // namespace

std::optional<FqPoly> is_torsion(const DrinfeldModule& m, const RatFunc& x, int deg_bound) {
  if (deg_bound < 0) throw std::invalid_argument("deg_bound must be non-negative");
  const FieldPtr& F = m.field();
  if (x.is_zero()) return FqPoly::one(F);
  std::vector<RatFunc> orbit{x};
  for (int n = 1; n <= deg_bound; ++n) {
    if (escapes(m, orbit.back())) return std::nullopt;
    orbit.push_back(m.phi_t().apply(orbit.back()));
    // Clear denominators, then look for y_n in the F_q-span of y_0..y_{n-1}.
    FqPoly L = FqPoly::one(F);
    for (const auto& y : orbit) L = L / gcd(L, y.den()) * y.den();
    std::vector<FqPoly> nums;
    std::size_t len = 0;
    for (const auto& y : orbit) {
      nums.push_back(y.num() * (L / y.den()));
      len = std::max(len, static_cast<std::size_t>(nums.back().degree() + 1));
    }
    std::vector<std::vector<Fq>> cols;
    for (int i = 0; i < n; ++i) cols.push_back(padded(nums[i], len));
    auto sol = solve_fq(F, cols, padded(nums[n], len));
    if (sol) {
      std::vector<Fq> q(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i < n; ++i) q[i] = F->neg((*sol)[i]);
      q[n] = F->one();
      return FqPoly(F, std::move(q));
    }
  }
  return std::nullopt;
}

std::optional<FqPoly> is_torsion_exhaustive(const DrinfeldModule& m, const RatFunc& x, int deg_bound) {
  if (deg_bound < 0) throw std::invalid_argument("deg_bound must be non-negative");
  const FieldPtr& F = m.field();
  for (int d = 0; d <= deg_bound; ++d) {
    const std::uint64_t lo = d == 0 ? 1 : poly_count(F, d - 1);
    const std::uint64_t hi = d == 0 ? 2 : 2 * lo;
    for (std::uint64_t i = lo; i < hi; ++i) {
      FqPoly Q = FqPoly::from_index(F, i);
      if (act(m, Q, x).is_zero()) return Q;
    }
  }
  return std::nullopt;
}

Rational canonical_height_estimate(const DrinfeldModule& m, const RatFunc& x, int n) {
  if (n < 1) throw std::invalid_argument("canonical_height_estimate needs n >= 1");
  if (x.is_zero()) return Rational(0);
  const std::int64_t q = m.field()->order();
  std::int64_t scale = 1;
  for (int i = 0; i < m.rank() * n; ++i) {
    if (scale > std::numeric_limits<std::int64_t>::max() / q)
      throw std::overflow_error("q^(r n) does not fit in 64 bits");
    scale *= q;
  }
  std::set<RatFunc> seen{x};
  RatFunc y = x;
  for (int k = 1; k <= n; ++k) {
    y = m.phi_t().apply(y);
    if (!seen.insert(y).second) return Rational(0);
  }
  return Rational(weil_height(y), scale);
}

bool looks_nontorsion(const DrinfeldModule& m, const RatFunc& x, int n, Rational threshold) {
  return canonical_height_estimate(m, x, n) > threshold && canonical_height_estimate(m, x, n + 1) > threshold;
}

bool good_reduction(const DrinfeldModule& m, const Place& v) {
  const auto& c = m.phi_t().coeffs();
  for (const auto& a : c)
    if (valuation(v, a) < 0) return false;
  return valuation(v, c.back()) == 0;
}

// ------------------------------------------------------- ProductAction

ProductAction::ProductAction(std::vector<DrinfeldModule> modules) : modules_(std::move(modules)) {
  if (modules_.empty()) throw std::invalid_argument("a product action needs at least one module");
  for (const auto& m : modules_) require_same_field(modules_.front().field(), m.field());
}

std::vector<RatFunc> ProductAction::act(const FqPoly& P, const std::vector<RatFunc>& x) const {
  if (x.size() != modules_.size()) throw std::invalid_argument("point dimension does not match the action");
  std::vector<RatFunc> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(dlang::act(modules_[i], P, x[i]));
  return out;
}

std::vector<LocalElem> ProductAction::act(const FqPoly& P, const std::vector<LocalElem>& x) const {
  if (x.size() != modules_.size()) throw std::invalid_argument("point dimension does not match the action");
  std::vector<LocalElem> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(dlang::act(modules_[i], P, x[i]));
  return out;
}

}  // namespace dlang
