#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "dlang/error.hpp"
#include "dlang/poly.hpp"
#include "dlang/ratfunc.hpp"

namespace dlang {

/// Valuations and absolute precisions; kInfinity stands for +infinity.
using Valuation = long long;
inline constexpr Valuation kInfinity = std::numeric_limits<long long>::max() / 4;

/// A place of F_q(t): the infinite place or a finite place given by a
/// monic irreducible pi.
///
/// Local elements are stored as polynomials in the place's local variable:
/// t itself at a finite place, s = 1/t at infinity. `uniformizer()` is pi in
/// that variable (so it is s at infinity).
class Place {
 public:
  static Place infinite(const FieldPtr& f);
  /// Throws std::invalid_argument unless pi is monic irreducible.
  static Place finite(const FqPoly& pi);

  bool is_infinite() const { return d_->infinite; }
  int degree() const { return d_->uniformizer.degree(); }
  const FieldPtr& field() const { return d_->uniformizer.field(); }
  /// pi in the local variable.
  const FqPoly& uniformizer() const { return d_->uniformizer; }
  /// pi^n in the local variable, n >= 0.
  FqPoly uniformizer_power(Valuation n) const;
  /// True when pi is the local variable itself, so reduction is truncation.
  bool is_monomial() const { return d_->monomial; }

  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.d_ == b.d_ || (a.d_->infinite == b.d_->infinite && a.d_->uniformizer == b.d_->uniformizer);
  }

 private:
  struct Data {
    bool infinite;
    bool monomial;
    FqPoly uniformizer;
    std::vector<FqPoly> powers;
  };
  explicit Place(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> build(bool infinite, FqPoly pi);

  std::shared_ptr<const Data> d_;
};

/// v(x); kInfinity for x = 0.
Valuation valuation(const Place& v, const RatFunc& x);

/// |x|_v = q^(log_q), with |x|_v = q^(-deg(v) v(x)). `zero` marks |0| = 0.
struct AbsValue {
  bool zero = false;
  long long log_q = 0;
  friend bool operator==(const AbsValue&, const AbsValue&) = default;
};
AbsValue abs_value(const Place& v, const RatFunc& x);

/// One term deg(v)*v(x) of the product formula.
struct PlaceContribution {
  std::string place;
  int degree;
  Valuation valuation;
};

/// Every place where x is not a unit, with deg(v)*v(x); the infinite place
/// is listed last.
std::vector<PlaceContribution> support(const RatFunc& x);

/// Sums deg(v)*v(x) over the support of x; true iff the total is zero.
/// Throws std::domain_error for x = 0.
bool product_formula_check(const RatFunc& x);

/// An element of the completion K_v known to a fixed absolute precision:
///   x = pi^val * unit + O(pi^prec),
/// where unit is a pi-adic unit kept modulo pi^(prec - val). An element that
/// is zero to its precision has val == prec. The exact zero has both equal to
/// kInfinity.
///
/// Addition keeps the smaller absolute precision; multiplication gives
/// min(prec_a + v(b), prec_b + v(a)). Relative precision never grows.
class LocalElem {
 public:
  /// The exact zero.
  static LocalElem zero(const Place& v);
  /// O(pi^prec).
  static LocalElem zero_to(const Place& v, Valuation prec);
  /// pi^val * unit + O(pi^prec); `unit` may be divisible by pi.
  static LocalElem from_parts(const Place& v, Valuation val, const FqPoly& unit, Valuation prec);

  const Place& place() const { return place_; }
  Valuation valuation() const { return val_; }
  Valuation precision() const { return prec_; }
  /// Number of known digits, prec - val.
  Valuation relative_precision() const { return is_exact_zero() ? kInfinity : prec_ - val_; }
  const FqPoly& unit() const { return unit_; }
  bool is_zero() const { return unit_.is_zero(); }
  bool is_exact_zero() const { return prec_ >= kInfinity; }

  /// Residue digits d_0 .. d_(rel-1) with x = pi^val * sum d_i pi^i; each
  /// digit is a polynomial of degree < deg(pi) in the local variable.
  std::vector<FqPoly> digits() const;

  LocalElem operator-() const;
  friend LocalElem operator+(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator-(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator/(const LocalElem& a, const LocalElem& b);
  LocalElem& operator+=(const LocalElem& o) { return *this = *this + o; }
  LocalElem& operator*=(const LocalElem& o) { return *this = *this * o; }

  /// Throws PrecisionError("precision exhausted") when zero to precision.
  LocalElem inverse() const;
  LocalElem scaled(Fq c) const;
  /// x^(q^times).
  LocalElem frobenius(int times = 1) const;
  /// Forget digits at and beyond absolute precision `prec`.
  LocalElem with_precision(Valuation prec) const;

  /// `val=<v> prec=<p> digits=<d0 d1 ...>`.
  std::string digit_string() const;

 private:
  LocalElem(Place v, Valuation val, FqPoly unit, Valuation prec)
      : place_(std::move(v)), val_(val), prec_(prec), unit_(std::move(unit)) {}
  static LocalElem normalized(const Place& v, Valuation val, FqPoly unit, Valuation prec);

  Place place_;
  Valuation val_;
  Valuation prec_;
  FqPoly unit_;
};

/// The image of x in K_v with `digits` known digits (digits >= 1).
LocalElem embed(const Place& v, const RatFunc& x, int digits);

LocalElem local_add(const LocalElem& a, const LocalElem& b);
LocalElem local_mul(const LocalElem& a, const LocalElem& b);
LocalElem local_inv(const LocalElem& a);
/// k * a, embedding k with as many digits as a carries.
LocalElem local_scale(const LocalElem& a, const RatFunc& k);

/// Number of leading digits (counted from min(v(a), v(b))) on which a and b
/// are known to agree. kInfinity when both are the exact zero.
Valuation agreement_digits(const LocalElem& a, const LocalElem& b);

}  // namespace dlang
