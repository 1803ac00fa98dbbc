#pragma once

#include <random>
#include <vector>

#include "dlang/algebra.hpp"
#include "dlang/analytic.hpp"
#include "dlang/mordell.hpp"

namespace dlang::testing {

inline FqPoly random_poly(const FieldPtr& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> d(0, max_deg);
  std::uniform_int_distribution<int> c(0, f->order() - 1);
  const int n = d(rng);
  std::vector<Fq> cs(n + 1);
  for (auto& x : cs) x = f->element(c(rng));
  return FqPoly(f, cs);
}

inline FqPoly random_nonzero_poly(const FieldPtr& f, std::mt19937_64& rng, int max_deg) {
  for (;;)
    if (FqPoly p = random_poly(f, rng, max_deg); !p.is_zero()) return p;
}

inline RatFunc random_ratfunc(const FieldPtr& f, std::mt19937_64& rng, int max_deg) {
  return RatFunc(random_poly(f, rng, max_deg), random_nonzero_poly(f, rng, max_deg));
}

inline RatFunc random_nonzero_ratfunc(const FieldPtr& f, std::mt19937_64& rng, int max_deg) {
  return RatFunc(random_nonzero_poly(f, rng, max_deg), random_nonzero_poly(f, rng, max_deg));
}

/// phi_t = t + a_1 tau + ... + a_r tau^r with polynomial a_i of degree <= 2,
/// a_r a nonzero constant so that reduction is good at every finite place.
inline DrinfeldModule random_module(const FieldPtr& f, std::mt19937_64& rng, int max_rank, bool unit_lead = true) {
  std::uniform_int_distribution<int> rank(1, max_rank);
  const int r = rank(rng);
  std::vector<RatFunc> c{RatFunc::t(f)};
  for (int i = 1; i < r; ++i) c.emplace_back(random_poly(f, rng, 2));
  if (unit_lead) {
    std::uniform_int_distribution<int> u(1, f->order() - 1);
    c.push_back(RatFunc::constant(f, f->element(u(rng))));
  } else {
    c.emplace_back(random_nonzero_poly(f, rng, 2));
  }
  return DrinfeldModule(TwistedPoly(f, c));
}

inline LocalElem random_local(const Place& v, std::mt19937_64& rng, Valuation val, int digits) {
  const FieldPtr& f = v.field();
  FqPoly unit = random_poly(f, rng, digits * v.degree());
  if ((unit % v.uniformizer()).is_zero()) unit += FqPoly::one(f);
  return LocalElem::from_parts(v, val, unit, val + digits);
}

}  // namespace dlang::testing
