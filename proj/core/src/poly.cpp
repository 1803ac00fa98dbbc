#include "dlang/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dlang {

FqPoly::FqPoly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

FqPoly FqPoly::constant(const FieldPtr& f, Fq c) { return FqPoly(f, {c}); }

FqPoly FqPoly::monomial(const FieldPtr& f, Fq c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Fq> v(static_cast<std::size_t>(deg) + 1);
  v[deg] = c;
  return FqPoly(f, std::move(v));
}

FqPoly FqPoly::from_index(const FieldPtr& f, std::uint64_t idx) {
  std::vector<Fq> v;
  const auto q = static_cast<std::uint64_t>(f->order());
  while (idx) {
    v.push_back(Fq{static_cast<std::uint8_t>(idx % q)});
    idx /= q;
  }
  return FqPoly(f, std::move(v));
}

std::uint64_t FqPoly::index() const {
  const auto q = static_cast<std::uint64_t>(field_->order());
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (r > (std::numeric_limits<std::uint64_t>::max() - it->v) / q)
      throw std::overflow_error("polynomial index does not fit in 64 bits");
    r = r * q + it->v;
  }
  return r;
}

FqPoly FqPoly::operator-() const {
  FqPoly r(*this);
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
  const GaloisField& F = *a.field_;
  const std::size_t q = static_cast<std::size_t>(F.order());
  const std::uint8_t* add = F.add_row(Fq{0});  // row 0 of the full table
  std::vector<Fq> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].v == 0) continue;
    const std::uint8_t* mrow = F.mul_row(a.c_[i]);
    Fq* out = r.data() + i;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[j].v = add[out[j].v * q + mrow[b.c_[j].v]];
    }
  }
  return FqPoly(a.field_, std::move(r));
}

FqPoly& FqPoly::operator*=(const FqPoly& o) { return *this = *this * o; }

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldPtr& f = a.field();
  if (a.degree() < b.degree()) return {FqPoly(f), a};
  const GaloisField& F = *f;
  const std::size_t q = static_cast<std::size_t>(F.order());
  const std::uint8_t* add = F.add_row(Fq{0});
  std::vector<Fq> r(a.coeffs().begin(), a.coeffs().end());
  auto bc = b.coeffs();
  const int db = b.degree();
  const Fq binv = F.inv(b.lead());
  std::vector<Fq> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    Fq c = r[i];
    if (c.v == 0) continue;
    Fq m = F.mul(c, binv);
    quo[i - db] = m;
    const std::uint8_t* mrow = F.mul_row(F.neg(m));
    Fq* out = r.data() + (i - db);
    for (int j = 0; j <= db; ++j) out[j].v = add[out[j].v * q + mrow[bc[j].v]];
  }
  r.resize(static_cast<std::size_t>(db));
  return {FqPoly(f, std::move(quo)), FqPoly(f, std::move(r))};
}

FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

FqPoly operator%(const FqPoly& a, const FqPoly& b) {
  require_same_field(a.field_, b.field_);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return a;
  const GaloisField& F = *a.field_;
  const std::size_t q = static_cast<std::size_t>(F.order());
  const std::uint8_t* add = F.add_row(Fq{0});
  std::vector<Fq> r(a.c_);
  const int db = b.degree();
  const Fq binv = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    Fq c = r[i];
    if (c.v == 0) continue;
    const std::uint8_t* mrow = F.mul_row(F.neg(F.mul(c, binv)));
    Fq* out = r.data() + (i - db);
    for (int j = 0; j <= db; ++j) out[j].v = add[out[j].v * q + mrow[b.c_[j].v]];
  }
  r.resize(static_cast<std::size_t>(db));
  return FqPoly(a.field_, std::move(r));
}

FqPoly FqPoly::scaled(Fq c) const {
  if (c.v == 0) return FqPoly(field_);
  FqPoly r(*this);
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

FqPoly FqPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::invalid_argument("negative shift");
  std::vector<Fq> v(static_cast<std::size_t>(k), Fq{0});
  v.insert(v.end(), c_.begin(), c_.end());
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::truncated(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  if (n <= 0) return FqPoly(field_);
  return FqPoly(field_, std::vector<Fq>(c_.begin(), c_.begin() + n));
}

FqPoly FqPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lead()));
}

FqPoly FqPoly::pow(std::uint64_t e) const {
  FqPoly r = one(field_);
  FqPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FqPoly FqPoly::powmod(std::uint64_t e, const FqPoly& m) const {
  FqPoly r = one(field_) % m;
  FqPoly b = *this % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

FqPoly FqPoly::frobenius(int times) const {
  if (times < 0) throw std::invalid_argument("negative Frobenius power");
  if (times == 0 || is_constant()) return *this;
  std::uint64_t step = 1;
  for (int i = 0; i < times; ++i) {
    step *= static_cast<std::uint64_t>(field_->order());
    if (step > (std::uint64_t{1} << 40)) throw std::overflow_error("Frobenius power too large");
  }
  std::vector<Fq> v(static_cast<std::size_t>(degree()) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(field_);
  std::vector<Fq> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i)));
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::reversed(int n) const {
  if (n < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  if (is_zero()) return *this;
  std::vector<Fq> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) v[n - i] = c_[i];
  return FqPoly(field_, std::move(v));
}

Fq FqPoly::eval(Fq x) const {
  Fq r{0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_->add(field_->mul(r, x), *it);
  return r;
}

int FqPoly::multiplicity(const FqPoly& pi) const {
  if (is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  if (pi.degree() < 1) throw std::invalid_argument("multiplicity of a constant");
  int m = 0;
  FqPoly f = *this;
  for (;;) {
    auto [quo, rem] = divmod(f, pi);
    if (!rem.is_zero()) return m;
    f = std::move(quo);
    ++m;
  }
}

std::string FqPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Fq c = c_[d];
    if (c.v == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = field_->to_string(c);
    if (d == 0) {
      os << cs;
      continue;
    }
    if (c.v != 1) os << cs << "*";
    os << var;
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i)
    if (auto c = a.c_[i].v <=> b.c_[i].v; c != 0) return c;
  return std::strong_ordering::equal;
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Xgcd xgcd(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& f = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::one(f), s1(f);
  FqPoly t0(f), t1 = FqPoly::one(f);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    FqPoly s2 = s0 - quo * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = t0 - quo * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fq li = f->inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

FqPoly inverse_mod(const FqPoly& a, const FqPoly& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (!g.is_one()) throw std::domain_error("polynomial is not invertible modulo the given modulus");
  return s % m;
}

}  // namespace dlang
