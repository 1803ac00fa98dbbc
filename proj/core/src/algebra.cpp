#include "dlang/algebra.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace dlang {

std::uint64_t poly_count(const FieldPtr& f, int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("max_deg must be non-negative");
  std::uint64_t n = 1;
  const auto q = static_cast<std::uint64_t>(f->order());
  for (int i = 0; i <= max_deg; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / q)
      throw std::overflow_error("polynomial enumeration too large");
    n *= q;
  }
  return n;
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FieldPtr& F = f.field();
  const FqPoly t = FqPoly::t(F);
  const auto q = static_cast<std::uint64_t>(F->order());
  FqPoly h = t % f;
  for (int i = 1; i <= n / 2; ++i) {
    h = h.powmod(q, f);
    if (!gcd(h - t, f).is_one()) return false;
  }
  return true;
}

std::vector<FqPoly> irreducible_monics(const FieldPtr& f, int d) {
  if (d <= 0) throw std::invalid_argument("irreducible_monics needs d >= 1");
  const std::uint64_t lo = poly_count(f, d - 1);  // q^d: first monic of degree d
  std::vector<FqPoly> out;
  for (std::uint64_t i = lo; i < 2 * lo; ++i) {
    FqPoly p = FqPoly::from_index(f, i);
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  return out;
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
FqPoly pth_root(const FqPoly& c) {
  const FieldPtr& F = c.field();
  const int p = F->characteristic();
  const unsigned long long e = [&] {
    unsigned long long r = 1;
    for (int i = 1; i < F->degree(); ++i) r *= static_cast<unsigned long long>(p);
    return r;
  }();
  std::vector<Fq> v(static_cast<std::size_t>(c.degree() / p) + 1);
  for (int i = 0; i <= c.degree(); i += p) v[i / p] = F->pow(c.coeff(i), e);
  return FqPoly(F, std::move(v));
}

void squarefree(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
  if (f.degree() < 1) return;
  const int p = f.field()->characteristic();
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * p, out);
}

void distinct_degree(FqPoly f, std::vector<std::pair<FqPoly, int>>& out) {
  const FieldPtr& F = f.field();
  const FqPoly t = FqPoly::t(F);
  const auto q = static_cast<std::uint64_t>(F->order());
  FqPoly h = t % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = h.powmod(q, f);
    FqPoly g = gcd(h - t, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
}

FqPoly random_below(const FieldPtr& F, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, F->order() - 1);
  std::vector<Fq> v(static_cast<std::size_t>(n));
  for (auto& c : v) c = F->element(dist(rng));
  return FqPoly(F, std::move(v));
}

void equal_degree(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldPtr& F = g.field();
  const auto q = static_cast<std::uint64_t>(F->order());
  for (;;) {
    FqPoly a = random_below(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    FqPoly b(F);
    if (F->characteristic() == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(kd-1)).
      FqPoly s = a % g;
      b = s;
      for (int j = 1; j < F->degree() * d; ++j) {
        s = (s * s) % g;
        b += s;
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2).
      FqPoly s = a % g;
      FqPoly norm = s;
      for (int j = 1; j < d; ++j) {
        s = s.powmod(q, g);
        norm = (norm * s) % g;
      }
      b = norm.powmod((q - 1) / 2, g) - FqPoly::one(F);
    }
    FqPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::vector<std::pair<FqPoly, int>> out;
  for (const auto& [part, mult] : sqf) {
    std::vector<std::pair<FqPoly, int>> ddf;
    distinct_degree(part, ddf);
    for (const auto& [g, d] : ddf) {
      std::vector<FqPoly> irr;
      equal_degree(g, d, rng, irr);
      for (auto& p : irr) out.emplace_back(std::move(p), mult);
    }
  }
  std::sort(out.begin(), out.end());
  // Merge repeated irreducibles coming from different squarefree layers.
  std::vector<std::pair<FqPoly, int>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  return merged;
}

}  // namespace dlang
