#pragma once

#include <compare>
#include <string>

#include "dlang/poly.hpp"

namespace dlang {

/// An element of K = F_q(t) in canonical form: coprime numerator and
/// monic denominator. Zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(const FieldPtr& f) : num_(f), den_(FqPoly::one(f)) {}
  /// A polynomial, viewed in K.
  RatFunc(FqPoly p);  // NOLINT(google-explicit-constructor)
  /// num / den in reduced form; throws on den = 0.
  RatFunc(const FqPoly& num, const FqPoly& den);

  static RatFunc constant(const FieldPtr& f, Fq c) { return RatFunc(FqPoly::constant(f, c)); }
  static RatFunc one(const FieldPtr& f) { return RatFunc(FqPoly::one(f)); }
  static RatFunc t(const FieldPtr& f) { return RatFunc(FqPoly::t(f)); }

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc scaled(Fq c) const;
  RatFunc inverse() const;
  /// Integer power; negative exponents invert.
  RatFunc pow(long long e) const;
  /// x^(q^times).
  RatFunc frobenius(int times = 1) const;

  /// `num` or `(num)/(den)`.
  std::string to_string() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

 private:
  struct Reduced {};
  RatFunc(FqPoly num, FqPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  FqPoly num_;
  FqPoly den_;
};

/// Canonical reduced form of num/den; error "division by zero in K" on den = 0.
RatFunc rat_normalize(const FqPoly& num, const FqPoly& den);

/// Weil height max(deg num, deg den); h(0) = 0.
long long weil_height(const RatFunc& x);

}  // namespace dlang
