#include "dlang/places.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dlang/algebra.hpp"

namespace dlang {
namespace {

constexpr Valuation kPowerCache = 160;

Valuation checked_mul(Valuation a, Valuation b) {
  if (a == 0 || b == 0) return 0;
  if (std::abs(a) > kInfinity / std::abs(b)) throw std::overflow_error("valuation overflow");
  return a * b;
}

FqPoly reduce(const Place& v, const FqPoly& u, Valuation n) {
  if (n <= 0) return FqPoly(v.field());
  if (v.is_monomial()) return u.truncated(static_cast<int>(std::min<Valuation>(n, 1 << 30)));
  if (u.degree() < n * v.degree()) return u;
  return u % v.uniformizer_power(n);
}

}  // namespace

// ---------------------------------------------------------------- Place

std::shared_ptr<const Place::Data> Place::build(bool infinite, FqPoly pi) {
  auto d = std::make_shared<Data>(Data{infinite, false, pi, {}});
  d->monomial = pi == FqPoly::t(pi.field());
  if (!d->monomial) {
    d->powers.reserve(kPowerCache);
    d->powers.push_back(FqPoly::one(pi.field()));
    for (Valuation i = 1; i < kPowerCache; ++i) d->powers.push_back(d->powers.back() * pi);
  }
  return d;
}

Place Place::infinite(const FieldPtr& f) { return Place(build(true, FqPoly::t(f))); }

Place Place::finite(const FqPoly& pi) {
  if (!pi.is_monic() || !is_irreducible(pi))
    throw std::invalid_argument("place must be a monic irreducible polynomial: " + pi.to_string());
  return Place(build(false, pi));
}

FqPoly Place::uniformizer_power(Valuation n) const {
  if (n < 0) throw std::invalid_argument("negative uniformizer power");
  if (d_->monomial) return FqPoly::monomial(field(), field()->one(), static_cast<int>(n));
  if (n < static_cast<Valuation>(d_->powers.size())) return d_->powers[n];
  return d_->uniformizer.pow(static_cast<std::uint64_t>(n));
}

std::string Place::to_string() const { return is_infinite() ? "inf" : d_->uniformizer.to_string(); }

// ------------------------------------------------------------ valuations

Valuation valuation(const Place& v, const RatFunc& x) {
  require_same_field(v.field(), x.field());
  if (x.is_zero()) return kInfinity;
  if (v.is_infinite()) return x.den().degree() - x.num().degree();
  return x.num().multiplicity(v.uniformizer()) - x.den().multiplicity(v.uniformizer());
}

AbsValue abs_value(const Place& v, const RatFunc& x) {
  if (x.is_zero()) return {true, 0};
  return {false, -static_cast<long long>(v.degree()) * valuation(v, x)};
}

std::vector<PlaceContribution> support(const RatFunc& x) {
  if (x.is_zero()) throw std::domain_error("the support of 0 is not defined");
  std::vector<PlaceContribution> out;
  std::vector<std::pair<FqPoly, Valuation>> vals;
  if (!x.num().is_constant())
    for (auto& [pi, m] : factor(x.num())) vals.emplace_back(pi, m);
  if (!x.den().is_constant())
    for (auto& [pi, m] : factor(x.den())) vals.emplace_back(pi, -m);
  std::sort(vals.begin(), vals.end());
  for (auto& [pi, m] : vals) out.push_back({pi.to_string(), pi.degree(), m});
  Valuation vinf = x.den().degree() - x.num().degree();
  if (vinf != 0) out.push_back({"inf", 1, vinf});
  return out;
}

bool product_formula_check(const RatFunc& x) {
  Valuation total = 0;
  for (const auto& c : support(x)) total += c.degree * c.valuation;
  return total == 0;
}

// ------------------------------------------------------------- LocalElem

LocalElem LocalElem::zero(const Place& v) { return LocalElem(v, kInfinity, FqPoly(v.field()), kInfinity); }

LocalElem LocalElem::zero_to(const Place& v, Valuation prec) {
  if (prec >= kInfinity) return zero(v);
  return LocalElem(v, prec, FqPoly(v.field()), prec);
}

LocalElem LocalElem::from_parts(const Place& v, Valuation val, const FqPoly& unit, Valuation prec) {
  return normalized(v, val, reduce(v, unit, prec - val), prec);
}

LocalElem LocalElem::normalized(const Place& v, Valuation val, FqPoly unit, Valuation prec) {
  if (prec >= kInfinity && unit.is_zero()) return zero(v);
  if (val >= prec || unit.is_zero()) return zero_to(v, prec);
  if (v.is_monomial()) {
    int k = 0;
    while (unit.coeff(k).v == 0) ++k;
    if (k > 0) {
      auto c = unit.coeffs();
      unit = FqPoly(v.field(), std::vector<Fq>(c.begin() + k, c.end()));
      val += k;
    }
  } else {
    for (;;) {
      auto [quo, rem] = divmod(unit, v.uniformizer());
      if (!rem.is_zero()) break;
      unit = std::move(quo);
      ++val;
    }
  }
  if (val >= prec) return zero_to(v, prec);
  return LocalElem(v, val, std::move(unit), prec);
}

std::vector<FqPoly> LocalElem::digits() const {
  std::vector<FqPoly> out;
  if (is_zero()) return out;
  const Valuation rel = prec_ - val_;
  if (place_.is_monomial()) {
    for (Valuation i = 0; i < rel; ++i) out.push_back(FqPoly::constant(place_.field(), unit_.coeff(static_cast<int>(i))));
    return out;
  }
  FqPoly u = unit_;
  for (Valuation i = 0; i < rel; ++i) {
    auto [quo, rem] = divmod(u, place_.uniformizer());
    out.push_back(std::move(rem));
    u = std::move(quo);
  }
  return out;
}

LocalElem LocalElem::operator-() const { return LocalElem(place_, val_, -unit_, prec_); }

LocalElem operator+(const LocalElem& a, const LocalElem& b) {
  if (!(a.place_ == b.place_)) throw std::invalid_argument("local elements at different places");
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const Valuation prec = std::min(a.prec_, b.prec_);
  const Valuation v = std::min(a.val_, b.val_);
  if (v >= prec) return LocalElem::zero_to(a.place_, prec);
  const Valuation n = prec - v;
  const Place& P = a.place_;
  FqPoly sum(P.field());
  for (const LocalElem* e : {&a, &b}) {
    if (e->is_zero()) continue;
    Valuation shift = e->val_ - v;
    if (shift >= n) continue;
    FqPoly term = P.is_monomial() ? e->unit_.shifted(static_cast<int>(shift))
                                  : e->unit_ * P.uniformizer_power(shift);
    sum += term;
  }
  return LocalElem::normalized(P, v, reduce(P, sum, n), prec);
}

LocalElem operator-(const LocalElem& a, const LocalElem& b) { return a + (-b); }

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
  if (!(a.place_ == b.place_)) throw std::invalid_argument("local elements at different places");
  if (a.is_exact_zero() || b.is_exact_zero()) return LocalElem::zero(a.place_);
  const Valuation val = a.val_ + b.val_;
  const Valuation prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  if (a.is_zero() || b.is_zero()) return LocalElem::zero_to(a.place_, prec);
  const Valuation n = prec - val;
  const Place& P = a.place_;
  FqPoly ua = reduce(P, a.unit_, n);
  FqPoly ub = reduce(P, b.unit_, n);
  return LocalElem::normalized(P, val, reduce(P, ua * ub, n), prec);
}

LocalElem LocalElem::inverse() const {
  if (is_zero()) throw PrecisionError("precision exhausted");
  const Valuation n = prec_ - val_;
  FqPoly inv = place_.is_monomial()
                   ? inverse_mod(unit_, FqPoly::monomial(place_.field(), place_.field()->one(), static_cast<int>(n)))
                   : inverse_mod(unit_, place_.uniformizer_power(n));
  return LocalElem(place_, -val_, std::move(inv), -val_ + n);
}

LocalElem operator/(const LocalElem& a, const LocalElem& b) { return a * b.inverse(); }

LocalElem LocalElem::scaled(Fq c) const {
  if (c.v == 0) return zero(place_);
  return LocalElem(place_, val_, unit_.scaled(c), prec_);
}

LocalElem LocalElem::frobenius(int times) const {
  if (times == 0 || is_exact_zero()) return *this;
  const auto q = static_cast<Valuation>(place_.field()->order());
  if (is_zero()) {
    Valuation p = prec_;
    for (int i = 0; i < times; ++i) p = checked_mul(p, q);
    return zero_to(place_, p);
  }
  const Valuation rel = prec_ - val_;
  Valuation val = val_;
  FqPoly u = unit_;
  for (int i = 0; i < times; ++i) {
    val = checked_mul(val, q);
    u = reduce(place_, u.frobenius(1), rel);
  }
  return LocalElem(place_, val, std::move(u), val + rel);
}

LocalElem LocalElem::with_precision(Valuation prec) const {
  if (prec >= prec_) return *this;
  if (prec <= val_) return zero_to(place_, prec);
  return LocalElem(place_, val_, reduce(place_, unit_, prec - val_), prec);
}

std::string LocalElem::digit_string() const {
  std::ostringstream os;
  if (is_exact_zero()) return "exact 0";
  if (is_zero()) {
    os << "O(pi^" << prec_ << ")";
    return os.str();
  }
  os << "val=" << val_ << " prec=" << prec_ << " digits=";
  const GaloisField& F = *place_.field();
  const bool wide = place_.degree() > 1;
  const char* sep = wide ? "," : (F.degree() == 1 && F.order() < 10 ? "" : " ");
  bool first = true;
  for (const auto& d : digits()) {
    if (!first) os << sep;
    first = false;
    if (wide)
      os << "(" << d.to_string() << ")";
    else
      os << F.to_string(d.coeff(0));
  }
  return os.str();
}

// ---------------------------------------------------------------- embed

LocalElem embed(const Place& v, const RatFunc& x, int digits) {
  require_same_field(v.field(), x.field());
  if (digits < 1) throw std::invalid_argument("embed needs at least one digit");
  if (x.is_zero()) return LocalElem::zero(v);
  const Valuation n = digits;
  if (v.is_infinite()) {
    const Valuation val = x.den().degree() - x.num().degree();
    FqPoly rn = x.num().reversed(x.num().degree()).truncated(digits);
    FqPoly rd = x.den().reversed(x.den().degree()).truncated(digits);
    FqPoly s_n = FqPoly::monomial(v.field(), v.field()->one(), digits);
    FqPoly unit = (rn * inverse_mod(rd, s_n)).truncated(digits);
    return LocalElem::from_parts(v, val, unit, val + n);
  }
  const FqPoly& pi = v.uniformizer();
  FqPoly num = x.num();
  FqPoly den = x.den();
  Valuation val = 0;
  for (;;) {
    auto [quo, rem] = divmod(num, pi);
    if (!rem.is_zero()) break;
    num = std::move(quo);
    ++val;
  }
  for (;;) {
    auto [quo, rem] = divmod(den, pi);
    if (!rem.is_zero()) break;
    den = std::move(quo);
    --val;
  }
  FqPoly mod = v.uniformizer_power(n);
  FqPoly unit = ((num % mod) * inverse_mod(den % mod, mod)) % mod;
  return LocalElem::from_parts(v, val, unit, val + n);
}

LocalElem local_add(const LocalElem& a, const LocalElem& b) { return a + b; }
LocalElem local_mul(const LocalElem& a, const LocalElem& b) { return a * b; }
LocalElem local_inv(const LocalElem& a) { return a.inverse(); }

LocalElem local_scale(const LocalElem& a, const RatFunc& k) {
  if (k.is_zero() || a.is_exact_zero()) return LocalElem::zero(a.place());
  Valuation rel = a.is_zero() ? 1 : a.relative_precision();
  return a * embed(a.place(), k, static_cast<int>(std::min<Valuation>(rel, 1 << 20)));
}

Valuation agreement_digits(const LocalElem& a, const LocalElem& b) {
  if (a.is_exact_zero() && b.is_exact_zero()) return kInfinity;
  const Valuation lead = std::min(a.valuation(), b.valuation());
  const LocalElem d = a - b;
  if (d.is_exact_zero()) return kInfinity;
  return d.valuation() - lead;
}

}  // namespace dlang
