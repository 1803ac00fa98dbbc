#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlang/places.hpp"
#include "dlang/poly.hpp"
#include "dlang/ratfunc.hpp"

namespace dlang {

/// sum_i c_i tau^i in K{tau}, with tau c = c^q tau. No trailing zeros.
class TwistedPoly {
 public:
  explicit TwistedPoly(const FieldPtr& f) : field_(f) {}
  TwistedPoly(const FieldPtr& f, std::vector<RatFunc> coeffs);

  static TwistedPoly scalar(const RatFunc& c);
  static TwistedPoly tau(const FieldPtr& f, int power = 1);

  const FieldPtr& field() const { return field_; }
  /// tau-degree; -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(int i) const;
  const std::vector<RatFunc>& coeffs() const { return c_; }

  friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b);
  friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b);
  TwistedPoly operator-() const;
  /// Composition; see tw_mul.
  friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b);

  /// sum_i c_i x^(q^i).
  RatFunc apply(const RatFunc& x) const;
  LocalElem apply(const LocalElem& x) const;

  std::string to_string() const;

  friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  FieldPtr field_;
  std::vector<RatFunc> c_;
};

/// Product in K{tau}: coefficient n is sum_{i+j=n} a_i * b_j^(q^i).
TwistedPoly tw_mul(const TwistedPoly& a, const TwistedPoly& b);

/// A Drinfeld module A -> K{tau}, determined by phi_t.
class DrinfeldModule {
 public:
  /// Throws std::invalid_argument("constant coefficient of phi_t must be t")
  /// or ("phi_t must have tau-degree at least 1").
  explicit DrinfeldModule(TwistedPoly phi_t);

  /// The Carlitz module phi_t = t + tau.
  static DrinfeldModule carlitz(const FieldPtr& f);

  const TwistedPoly& phi_t() const { return phi_t_; }
  int rank() const { return phi_t_.degree(); }
  const FieldPtr& field() const { return phi_t_.field(); }

  friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) { return a.phi_t_ == b.phi_t_; }

 private:
  TwistedPoly phi_t_;
};

/// phi_P, by Horner's rule in K{tau}.
TwistedPoly phi_of(const DrinfeldModule& m, const FqPoly& P);

/// phi_P(x) = sum p_i phi_t^i(x).
RatFunc act(const DrinfeldModule& m, const FqPoly& P, const RatFunc& x);
/// phi_P(x) computed in K_v; coefficients of phi_t are embedded with as many
/// digits as x carries.
LocalElem act(const DrinfeldModule& m, const FqPoly& P, const LocalElem& x);
/// phi_t in K_v, embedded to `digits` digits.
std::vector<LocalElem> embedded_phi_t(const DrinfeldModule& m, const Place& v, int digits);
/// One application of phi_t in K_v with pre-embedded coefficients.
LocalElem apply_phi_t(const std::vector<LocalElem>& phi_t, const LocalElem& x);

/// Monic generator of the annihilator of x if it has degree <= deg_bound.
/// Works by finding the first F_q-linear dependence among
/// x, phi_t(x), phi_t^2(x), ...; stops early once an iterate provably has
/// unbounded orbit height.
std::optional<FqPoly> is_torsion(const DrinfeldModule& m, const RatFunc& x, int deg_bound);
/// Same answer by trying every monic Q with deg Q <= deg_bound in order.
std::optional<FqPoly> is_torsion_exhaustive(const DrinfeldModule& m, const RatFunc& x, int deg_bound);

using Rational = boost::rational<std::int64_t>;

/// h(phi_{t^n}(x)) / q^(r n). Once the t-power orbit of x revisits an
/// earlier value the canonical height is known to vanish and 0 is returned.
Rational canonical_height_estimate(const DrinfeldModule& m, const RatFunc& x, int n);

/// Estimate exceeds `threshold` at both n and n + 1.
bool looks_nontorsion(const DrinfeldModule& m, const RatFunc& x, int n,
                      Rational threshold = Rational(1, 2));

/// Coefficients of phi_t integral at v and the leading one a v-unit.
bool good_reduction(const DrinfeldModule& m, const Place& v);

/// The coordinate-wise action of (phi_1, ..., phi_g) on G_a^g.
class ProductAction {
 public:
  explicit ProductAction(std::vector<DrinfeldModule> modules);

  std::size_t dimension() const { return modules_.size(); }
  const DrinfeldModule& operator[](std::size_t i) const { return modules_[i]; }
  const std::vector<DrinfeldModule>& modules() const { return modules_; }
  const FieldPtr& field() const { return modules_.front().field(); }

  std::vector<RatFunc> act(const FqPoly& P, const std::vector<RatFunc>& x) const;
  std::vector<LocalElem> act(const FqPoly& P, const std::vector<LocalElem>& x) const;

 private:
  std::vector<DrinfeldModule> modules_;
};

}  // namespace dlang
