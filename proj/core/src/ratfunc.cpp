#include "dlang/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlang {

RatFunc::RatFunc(FqPoly p) : num_(std::move(p)), den_(FqPoly::one(num_.field())) {}

RatFunc::RatFunc(const FqPoly& num, const FqPoly& den) : num_(num.field()), den_(num.field()) {
  require_same_field(num.field(), den.field());
  if (den.is_zero()) throw std::domain_error("division by zero in K");
  if (num.is_zero()) {
    den_ = FqPoly::one(num.field());
    return;
  }
  FqPoly g = gcd(num, den);
  FqPoly n = g.is_one() ? num : num / g;
  FqPoly d = g.is_one() ? den : den / g;
  Fq li = num.field()->inv(d.lead());
  num_ = n.scaled(li);
  den_ = d.scaled(li);
}

RatFunc rat_normalize(const FqPoly& num, const FqPoly& den) { return RatFunc(num, den); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  FqPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    // Sum of coprime-denominator fractions is already reduced.
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
  }
  FqPoly ad = a.den_ / g;
  FqPoly bd = b.den_ / g;
  FqPoly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RatFunc(a.field());
  FqPoly h = gcd(n, g);
  FqPoly d = ad * b.den_;
  if (!h.is_one()) {
    n = n / h;
    d = d / h;
  }
  return RatFunc(std::move(n), std::move(d), RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
  FqPoly g1 = gcd(a.num_, b.den_);
  FqPoly g2 = gcd(b.num_, a.den_);
  FqPoly n1 = g1.is_one() ? a.num_ : a.num_ / g1;
  FqPoly d2 = g1.is_one() ? b.den_ : b.den_ / g1;
  FqPoly n2 = g2.is_one() ? b.num_ : b.num_ / g2;
  FqPoly d1 = g2.is_one() ? a.den_ : a.den_ / g2;
  return RatFunc(n1 * n2, d1 * d2, RatFunc::Reduced{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in K");
  Fq li = field()->inv(num_.lead());
  return RatFunc(den_.scaled(li), num_.scaled(li), Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::scaled(Fq c) const {
  if (c.v == 0) return RatFunc(field());
  return RatFunc(num_.scaled(c), den_, Reduced{});
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)),
                 Reduced{});
}

RatFunc RatFunc::frobenius(int times) const {
  // Frobenius is an injective ring map, so coprimality and monicity survive.
  return RatFunc(num_.frobenius(times), den_.frobenius(times), Reduced{});
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const FqPoly& p) {
    std::string s = p.to_string();
    bool simple = s.find(' ') == std::string::npos && s.find('*') == std::string::npos;
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
  if (auto c = a.den_ <=> b.den_; c != 0) return c;
  return a.num_ <=> b.num_;
}

long long weil_height(const RatFunc& x) {
  if (x.is_zero()) return 0;
  return std::max(x.num().degree(), x.den().degree());
}

}  // namespace dlang
