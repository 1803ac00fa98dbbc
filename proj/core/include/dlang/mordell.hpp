#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlang/analytic.hpp"
#include "dlang/mpoly.hpp"
#include "dlang/twisted.hpp"

namespace dlang {

/// Common zero locus of f_1..f_l in G_a^g.
struct Variety {
  Variety(int g, std::vector<MPoly> equations);

  int g;
  std::vector<MPoly> equations;

  bool contains(const std::vector<RatFunc>& x) const;
};

/// {y : p + y in V}, i.e. every f_j with X_i replaced by p_i + X_i.
Variety translate_by(const Variety& V, const std::vector<RatFunc>& p);

/// The cyclic submodule generated by one point of G_a^g.
struct CyclicModule {
  CyclicModule(ProductAction action, std::vector<RatFunc> generator);

  ProductAction action;
  std::vector<RatFunc> generator;
};

struct OrbitEntry {
  FqPoly P;
  std::vector<RatFunc> point;
};

/// (P, phi_P(x)) for every P with deg P < D, in polynomial index order.
/// The basis phi_(t^i)(x) is computed once; each entry is an F_q-combination
/// of it.
class OrbitView {
 public:
  OrbitView(const CyclicModule& m, int D);

  std::uint64_t size() const { return count_; }
  OrbitEntry at(std::uint64_t index) const;
  std::vector<RatFunc> point(const FqPoly& P) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = OrbitEntry;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const OrbitView* view, std::uint64_t i) : view_(view), i_(i) {}
    OrbitEntry operator*() const { return view_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator r = *this;
      ++i_;
      return r;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const OrbitView* view_ = nullptr;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  FieldPtr field_;
  std::size_t g_;
  std::uint64_t count_;
  std::vector<std::vector<RatFunc>> basis_;
};

OrbitView orbit(const CyclicModule& m, int D);

/// {P : deg P < D, phi_P(x) in V}, by exact evaluation. With threads > 1 the
/// index range is split into contiguous slices; the result does not depend
/// on the thread count.
std::set<FqPoly> intersect(const Variety& V, const CyclicModule& m, int D, unsigned threads = 1);

/// d + (Q) with Q monic and deg d < deg Q.
struct Coset {
  FqPoly d;
  FqPoly Q;

  bool contains(const FqPoly& P) const { return ((P - d) % Q).is_zero(); }
  /// Whether this coset, as a subset of A, lies inside `o`.
  bool inside(const Coset& o) const;
  friend bool operator==(const Coset& a, const Coset& b) { return a.d == b.d && a.Q == b.Q; }
};

struct CosetStructure {
  std::vector<Coset> cosets;
  std::vector<FqPoly> isolated;
  int search_bound = 0;

  bool contains(const FqPoly& P) const;
  /// All members of degree < D.
  std::set<FqPoly> expand(const FieldPtr& f, int D) const;
};

/// Greedy cover of S by residue classes, moduli taken by increasing degree
/// and then index order. Throws Error("modulus exceeds evidence") when
/// max_mod_deg >= D.
CosetStructure infer_cosets(const std::set<FqPoly>& S, const FieldPtr& f, int D, int max_mod_deg);

/// Coset lists at D and D + 1 compared; isolated points may differ.
struct Stability {
  bool stable;
  CosetStructure at_D;
  CosetStructure at_next;
};
Stability check_stability(const Variety& V, const CyclicModule& m, int D, int max_mod_deg, unsigned threads = 1);

/// At least one coset whenever |S| >= threshold and D >= 4.
bool stronger_result_echo(const std::set<FqPoly>& S, const CosetStructure& c, int D, std::size_t threshold = 8);

struct VerifyOptions {
  int orbit_samples = 5;
  int random_samples = 5;
  int witness_cap = 32;
  /// Residual floor; precision - 5 when unset.
  std::optional<Valuation> floor;
  int terms = kDefaultTerms;
  std::uint64_t seed = 20240611;
};

struct ResidualSample {
  std::string kind;  // "orbit" or "random"
  std::string label;
  /// One entry per equation; kInfinity for an exact zero.
  std::vector<Valuation> valuations;
  std::vector<Valuation> precisions;
  bool passed;
};

struct CosetVerification {
  Coset coset;
  Place place;
  int precision;
  Valuation floor;
  Valuation min_valuation;
  /// Term valuations still strictly increasing at the truncation order;
  /// the tail beyond it is assumed, not proved.
  bool tail_increasing;
  FqPoly witness;
  std::string witness_rule;
  /// Coordinate order used: lead first.
  std::vector<std::size_t> order;
  /// lambda for each non-lead coordinate, in `order`.
  std::vector<LocalElem> lambdas;
  std::vector<ResidualSample> samples;
  bool passed;
};

/// Checks f_(d,j)(Z_u) = 0 at orbit points beyond the detection bound and at
/// random u in the ball. Throws Error("no analytic witness") when no
/// P_0 in (Q) with phi_(P_0)(x) in the ball is found below the cap.
CosetVerification verify_coset_analytic(const Variety& V, const CyclicModule& m, const Coset& coset, const Place& v,
                                        int N, int search_bound, const VerifyOptions& opt = {});

/// Torsion part given by generators plus a free cyclic part.
struct RankOneModule {
  std::vector<std::vector<RatFunc>> torsion_generators;
  CyclicModule free_part;
};

/// All of A * T_1 + ... + A * T_k, each T_j annihilated coordinate-wise by
/// is_torsion with the given bound. Throws Error("unverified torsion
/// generator") otherwise.
std::vector<std::vector<RatFunc>> torsion_subgroup(const ProductAction& action,
                                                   const std::vector<std::vector<RatFunc>>& gens, int deg_bound);

struct TorsionTranslate {
  std::vector<RatFunc> gamma;
  std::set<FqPoly> S;
  CosetStructure structure;
};

/// One structure per torsion element gamma, for {y in the free part : gamma + y in V}.
std::vector<TorsionTranslate> intersect_rank_one(const Variety& V, const RankOneModule& M, int D, int max_mod_deg,
                                                 int torsion_deg_bound = 8, unsigned threads = 1);

}  // namespace dlang
