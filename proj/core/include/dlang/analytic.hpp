#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dlang/places.hpp"
#include "dlang/twisted.hpp"

namespace dlang {

enum class SeriesKind { Exp, Log };

std::string to_string(SeriesKind k);

/// Default number of series terms.
inline constexpr int kDefaultTerms = 12;

/// Truncated exponential or logarithm of a Drinfeld module with exact
/// coefficients in K. coeffs[0] == 1.
struct ExpLogSeries {
  SeriesKind kind;
  DrinfeldModule module;
  std::vector<RatFunc> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// e_n (t^(q^n) - t) = sum_{j=1}^{min(r,n)} a_j e_{n-j}^(q^j), e_0 = 1.
ExpLogSeries exp_coeffs(const DrinfeldModule& m, int N);
/// l_n (t - t^(q^n)) = sum_{i=0}^{n-1} l_i a_{n-i}^(q^i), l_0 = 1.
ExpLogSeries log_coeffs(const DrinfeldModule& m, int N);

/// a o b as twisted power series, truncated mod tau^(N+1).
std::vector<RatFunc> compose_truncated(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, int N);

/// The same series with coefficients in K_v.
struct LocalSeries {
  SeriesKind kind;
  Place place;
  std::vector<LocalElem> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Runs the coefficient recursion directly in K_v, keeping `digits` known
/// digits per coefficient. Cheap even when the K-coefficients are huge.
LocalSeries local_series(const DrinfeldModule& m, SeriesKind kind, const Place& v, int terms, int digits);
/// Embeds exact coefficients.
LocalSeries embed_series(const ExpLogSeries& s, const Place& v, int digits);

/// Largest usable term count for the field: q^terms stays below 2^40.
int effective_terms(const FieldPtr& f, int requested);

/// A ball {x : v(x) >= min_valuation} on which both the exponential and the
/// logarithm are certified isometries up to the truncation order.
struct ConvergenceBall {
  Place place;
  Valuation min_valuation = 1;
  int order = 0;
  /// Terms past `order` are assumed to continue the strict increase seen
  /// on the last computed terms; always true, reported for auditability.
  bool heuristic_tail = true;
  /// The last three term-valuation increments were strictly increasing.
  bool tail_increasing = true;
  /// Certified at the infinite place, where reduction is always bad.
  bool infinite_place = false;
  std::vector<Valuation> exp_valuations;
  std::vector<Valuation> log_valuations;

  bool contains(const LocalElem& x) const { return x.valuation() >= min_valuation; }
};

/// Smallest m >= 1 such that for both series and 1 <= n <= N,
///   v(c_n) + q^n m > v(c_{n-1}) + q^(n-1) m  and  v(c_n) + q^n m > m.
/// Requires good reduction at finite places. Throws Error("no certified
/// ball at this truncation") when no m <= 2^20 works.
ConvergenceBall ball(const DrinfeldModule& m, const Place& v, int N);
/// The same test on already valued coefficient lists.
ConvergenceBall certify_ball(const Place& v, const std::vector<Valuation>& exp_vals,
                             const std::vector<Valuation>& log_vals);

/// sum c_n x^(q^n). Throws BallError("outside convergence ball") unless
/// v(x) >= b.min_valuation.
LocalElem eval_series(const LocalSeries& s, const ConvergenceBall& b, const LocalElem& x);
LocalElem eval_exp(const LocalSeries& s, const ConvergenceBall& b, const LocalElem& x);
LocalElem eval_log(const LocalSeries& s, const ConvergenceBall& b, const LocalElem& x);
LocalElem eval_exp(const ExpLogSeries& s, const ConvergenceBall& b, const LocalElem& x);
LocalElem eval_log(const ExpLogSeries& s, const ConvergenceBall& b, const LocalElem& x);

/// Process-wide cache of local series keyed by (module, place, kind, terms,
/// digits). Reads are shared; results are identical whether or not a value
/// came from the cache.
std::shared_ptr<const LocalSeries> cached_local_series(const DrinfeldModule& m, SeriesKind kind, const Place& v,
                                                       int terms, int digits);

/// Exp/log series and balls for every module of a product action at one place.
class AnalyticContext {
 public:
  AnalyticContext(const ProductAction& action, const Place& v, int digits, int terms = kDefaultTerms);

  const ProductAction& action() const { return action_; }
  const Place& place() const { return place_; }
  int digits() const { return digits_; }
  int terms() const { return terms_; }
  /// Ball for module i.
  const ConvergenceBall& ball(std::size_t i) const { return balls_[i]; }
  /// Largest of the per-module radii parameters.
  Valuation min_valuation() const { return min_valuation_; }

  LocalElem log(std::size_t i, const LocalElem& x) const;
  LocalElem exp(std::size_t i, const LocalElem& x) const;
  LocalElem embed(const RatFunc& x) const;

 private:
  ProductAction action_;
  Place place_;
  int digits_;
  int terms_;
  std::vector<ConvergenceBall> balls_;
  std::vector<std::shared_ptr<const LocalSeries>> exp_;
  std::vector<std::shared_ptr<const LocalSeries>> log_;
  Valuation min_valuation_ = 1;
};

struct SameRatioReport {
  bool holds;
  LocalElem left;
  LocalElem right;
  Valuation agreement;
  Valuation min_valuation_theta;
  Valuation min_valuation_psi;
};

/// log_theta(theta_P x) log_psi(psi_Q y) against log_theta(theta_Q x) log_psi(psi_P y).
/// Throws BallError when one of the four points misses its ball.
SameRatioReport same_ratio_report(const DrinfeldModule& theta, const DrinfeldModule& psi, const RatFunc& x,
                                  const RatFunc& y, const FqPoly& P, const FqPoly& Q, const Place& v, int N,
                                  int terms = kDefaultTerms);
bool same_ratio_check(const DrinfeldModule& theta, const DrinfeldModule& psi, const RatFunc& x, const RatFunc& y,
                      const FqPoly& P, const FqPoly& Q, const Place& v, int N);

/// lambda_i = log_i(y_i) / log_1(y_1), i = 2..g, for an orbit point y
/// already inside the ball. Throws Error("λ undefined: x_1 torsion") when
/// log_1(y_1) vanishes.
std::vector<LocalElem> lambdas_from_point(const AnalyticContext& ctx, const std::vector<LocalElem>& y);
/// lambda_i at phi_P(point), computed in K_v with N digits.
std::vector<LocalElem> lambda_at(const ProductAction& action, const std::vector<RatFunc>& point, const FqPoly& P,
                                 const Place& v, int N, int terms = kDefaultTerms);

/// Coordinate order putting first the coordinate of smallest valuation
/// (largest absolute value); ties keep the lowest index. Others keep their order.
std::vector<std::size_t> normalize_lead(const std::vector<LocalElem>& values);

/// Z_u = (u, exp_2(lambda_2 log_1 u), ..., exp_g(lambda_g log_1 u)).
/// Throws BallError for u outside the ball and Error("uncertified λ
/// magnitude") when some v(lambda_i) < 0.
std::vector<LocalElem> zu(const AnalyticContext& ctx, const std::vector<LocalElem>& lambdas, const LocalElem& u);
std::vector<LocalElem> zu(const ProductAction& action, const std::vector<LocalElem>& lambdas, const Place& v,
                          const LocalElem& u);

/// Newton-polygon bound on the number of zeros z with v(z) >= min_val of
/// sum b_i z^i: zeros at the origin plus the lengths of the segments with
/// slope <= -min_val. Coefficients that are zero to precision are skipped.
int isolated_zero_bound(const std::vector<LocalElem>& coeffs, Valuation min_val);

}  // namespace dlang
