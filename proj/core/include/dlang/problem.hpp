#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlang/mordell.hpp"

namespace dlang {

struct Bounds {
  int D = 6;
  /// Largest modulus degree tried by coset inference; D - 1 when unset.
  std::optional<int> max_mod_deg;
  int precision = 40;
  /// Uniformizer of the working place; nullopt is the infinite place.
  std::optional<FqPoly> place;
  int terms = kDefaultTerms;
  int deg_bound = 8;
  int samples = 5;

  int modulus_cap() const { return max_mod_deg.value_or(D - 1); }
};

/// A problem file:
///
///   [field]       p = 2, k = 1, conductor = x^2 + x + 1 (k > 1 only)
///   [module.i]    phi_t = t + tau
///   [point]       x1 = t^2, x2 = t   (or x = t^2, t)
///   [torsion]     gen = 0, t         (repeatable)
///   [variety]     f = X2             (repeatable)
///   [bounds]      D, max_mod_deg, precision, place, terms, deg_bound, samples
///
/// One `key = value` per line; `#` starts a comment.
struct ProblemSpec {
  int p = 0;
  int k = 1;
  FieldPtr field;
  std::vector<TwistedPoly> phi;
  std::vector<RatFunc> point;
  std::vector<std::vector<RatFunc>> torsion;
  std::vector<MPoly> equations;
  Bounds bounds;

  std::size_t dimension() const { return phi.size(); }
  /// Throws std::invalid_argument naming the violated constraint.
  std::vector<DrinfeldModule> modules() const;
  ProductAction action() const;
  Place place() const;
  /// Requires [point].
  CyclicModule cyclic() const;
  /// Requires [variety].
  Variety variety() const;
};

/// Throws ParseError with line and column.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::filesystem::path& path);

/// Canonical text form; parse_problem(serialize(s)) serializes identically.
std::string serialize(const ProblemSpec& s);

}  // namespace dlang
