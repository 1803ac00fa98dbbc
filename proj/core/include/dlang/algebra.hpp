#pragma once

#include <cstdint>
#include <ranges>
#include <utility>
#include <vector>

#include "dlang/field.hpp"
#include "dlang/poly.hpp"
#include "dlang/ratfunc.hpp"

namespace dlang {

/// q^(max_deg+1), the number of polynomials of degree <= max_deg.
std::uint64_t poly_count(const FieldPtr& f, int max_deg);

/// All polynomials of degree <= max_deg in degree-lexicographic order
/// (the order of FqPoly::index()).
inline auto enumerate_polys(const FieldPtr& f, int max_deg) {
  return std::views::iota(std::uint64_t{0}, poly_count(f, max_deg)) |
         std::views::transform([f](std::uint64_t i) { return FqPoly::from_index(f, i); });
}

bool is_irreducible(const FqPoly& f);

/// The monic irreducible polynomials of degree d, in canonical order.
std::vector<FqPoly> irreducible_monics(const FieldPtr& f, int d);

/// Factorisation into monic irreducibles with multiplicities, sorted
/// canonically. The unit factor is dropped. f must be nonzero.
std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f);

}  // namespace dlang
