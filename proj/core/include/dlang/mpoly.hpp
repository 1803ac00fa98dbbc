#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlang/places.hpp"
#include "dlang/ratfunc.hpp"

namespace dlang {

/// Sparse polynomial in X_1..X_n with coefficients in K.
class MPoly {
 public:
  using Exponent = std::vector<int>;

  MPoly(const FieldPtr& f, int nvars);

  static MPoly constant(const FieldPtr& f, int nvars, const RatFunc& c);
  /// X_(i+1); i is zero-based.
  static MPoly variable(const FieldPtr& f, int nvars, int i);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, RatFunc>& terms() const { return terms_; }
  int total_degree() const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly pow(int e) const;
  MPoly scaled(const RatFunc& c) const;

  RatFunc eval(const std::vector<RatFunc>& x) const;
  /// Coefficients are embedded with as many digits as the inputs carry.
  LocalElem eval(const std::vector<LocalElem>& x) const;

  /// Terms by decreasing total degree, then decreasing exponent vector.
  std::string to_string() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponent& e, const RatFunc& c);

  FieldPtr field_;
  int nvars_;
  std::map<Exponent, RatFunc> terms_;
};

}  // namespace dlang
