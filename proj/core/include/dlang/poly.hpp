#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlang/field.hpp"

namespace dlang {

/// A polynomial in F_q[t]. Coefficients are stored low to high with no
/// trailing zeros; the zero polynomial has an empty coefficient vector.
class FqPoly {
 public:
  explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
  FqPoly(FieldPtr field, std::vector<Fq> coeffs);

  static FqPoly constant(const FieldPtr& f, Fq c);
  static FqPoly one(const FieldPtr& f) { return constant(f, f->one()); }
  /// c * t^deg
  static FqPoly monomial(const FieldPtr& f, Fq c, int deg);
  /// The indeterminate t.
  static FqPoly t(const FieldPtr& f) { return monomial(f, f->one(), 1); }

  /// Inverse of index(): the base-q digits of `idx` are the coefficients.
  static FqPoly from_index(const FieldPtr& f, std::uint64_t idx);
  /// Position of this polynomial in the degree-lexicographic enumeration.
  std::uint64_t index() const;

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Fq{1}; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == Fq{1}; }
  Fq coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Fq{0}; }
  Fq lead() const { return c_.empty() ? Fq{0} : c_.back(); }
  std::span<const Fq> coeffs() const { return c_; }

  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  FqPoly& operator*=(const FqPoly& o);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  /// Quotient and remainder of Euclidean division; b must be nonzero.
  friend FqPoly operator/(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator%(const FqPoly& a, const FqPoly& b);

  FqPoly scaled(Fq c) const;
  /// Multiplication by t^k.
  FqPoly shifted(int k) const;
  /// Keeps only the coefficients of t^0 .. t^(n-1).
  FqPoly truncated(int n) const;
  FqPoly monic() const;
  FqPoly pow(std::uint64_t e) const;
  /// this^e mod m.
  FqPoly powmod(std::uint64_t e, const FqPoly& m) const;
  /// f^(q^times), which equals f(t^(q^times)) since F_q is fixed by Frobenius.
  FqPoly frobenius(int times = 1) const;
  FqPoly derivative() const;
  /// Coefficient reversal with respect to degree n >= degree().
  FqPoly reversed(int n) const;
  Fq eval(Fq x) const;

  /// Multiplicity of `pi` as a factor (pi non-constant); this must be nonzero.
  int multiplicity(const FqPoly& pi) const;

  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
  /// Degree first, then coefficients from the leading one down.
  friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<Fq> c_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
/// Monic gcd (zero when both inputs are zero).
FqPoly gcd(FqPoly a, FqPoly b);

struct Xgcd {
  FqPoly g, s, t;  // g = s*a + t*b, g monic
};
Xgcd xgcd(const FqPoly& a, const FqPoly& b);

/// a^{-1} mod m; throws when gcd(a, m) != 1.
FqPoly inverse_mod(const FqPoly& a, const FqPoly& m);

}  // namespace dlang
