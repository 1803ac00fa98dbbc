#include "dlang/field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dlang {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Conway polynomials, coefficients low to high.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

}  // namespace

std::vector<int> GaloisField::default_conductor(int p, int k) {
  if (k == 1) return {0, 1};
  auto it = conway_table().find({p, k});
  if (it == conway_table().end()) return {};
  return it->second;
}

FieldPtr GaloisField::make(int p, int k) {
  auto c = default_conductor(p, k);
  if (c.empty())
    throw std::invalid_argument("no built-in conductor for p=" + std::to_string(p) +
                                ", k=" + std::to_string(k) + "; supply one");
  return make(p, k, std::move(c));
}

FieldPtr GaloisField::make(int p, int k, std::vector<int> conductor) {
  return FieldPtr(new GaloisField(p, k, std::move(conductor)));
}

GaloisField::GaloisField(int p, int k, std::vector<int> conductor)
    : p_(p), k_(k), q_(1), conductor_(std::move(conductor)) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1 || k > 8) throw std::invalid_argument("field degree k must satisfy 1 <= k <= 8");
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 256) throw std::invalid_argument("field order q must be at most 256");
  if (static_cast<int>(conductor_.size()) != k + 1)
    throw std::invalid_argument("conductor must have degree k");
  for (int& c : conductor_) c = ((c % p) + p) % p;
  if (conductor_.back() != 1) throw std::invalid_argument("conductor must be monic");

  // Digit vectors of every element.
  std::vector<std::vector<int>> digits(q_, std::vector<int>(k_, 0));
  for (int i = 0; i < q_; ++i) {
    int n = i;
    for (int j = 0; j < k_; ++j) {
      digits[i][j] = n % p_;
      n /= p_;
    }
  }
  auto encode = [&](const std::vector<int>& d) {
    int n = 0;
    for (int j = k_ - 1; j >= 0; --j) n = n * p_ + d[j];
    return static_cast<std::uint8_t>(n);
  };

  const auto nq = static_cast<std::size_t>(q_);
  add_.assign(nq * nq, 0);
  mul_.assign(nq * nq, 0);
  neg_.assign(nq, 0);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> nd(k_);
    for (int j = 0; j < k_; ++j) nd[j] = (p_ - digits[a][j]) % p_;
    neg_[a] = encode(nd);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> s(k_);
      for (int j = 0; j < k_; ++j) s[j] = (digits[a][j] + digits[b][j]) % p_;
      add_[a * nq + b] = encode(s);

      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int j = 0; j <= k_; ++j)
          prod[d - k_ + j] = ((prod[d - k_ + j] - c * conductor_[j]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * nq + b] = encode(prod);
    }
  }

  // F_p[X]/(conductor) is a field iff it has no zero divisors.
  inv_.assign(nq, 0);
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      std::uint8_t m = mul_[a * nq + b];
      if (m == 0) throw std::invalid_argument("conductor is not irreducible over F_p");
      if (m == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }

  // Smallest primitive element.
  log_.assign(nq, -1);
  exp_.assign(nq, 0);
  for (int cand = 1; cand < q_; ++cand) {
    std::vector<int> lg(nq, -1);
    int x = 1;
    int order = 0;
    do {
      lg[x] = order;
      x = mul_[x * nq + cand];
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      generator_ = Fq{static_cast<std::uint8_t>(cand)};
      log_ = std::move(lg);
      int y = 1;
      for (int e = 0; e < q_ - 1; ++e) {
        exp_[e] = static_cast<std::uint8_t>(y);
        y = mul_[y * nq + cand];
      }
      break;
    }
  }
}

Fq GaloisField::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return Fq{static_cast<std::uint8_t>(r)};
}

Fq GaloisField::element(int i) const {
  if (i < 0 || i >= q_) throw std::out_of_range("field element index out of range");
  return Fq{static_cast<std::uint8_t>(i)};
}

Fq GaloisField::generator_power(long long i) const {
  long long m = q_ - 1;
  long long e = ((i % m) + m) % m;
  return Fq{exp_[static_cast<std::size_t>(e)]};
}

int GaloisField::log(Fq x) const {
  if (x.v == 0) throw std::domain_error("logarithm of zero in F_q");
  return log_[x.v];
}

Fq GaloisField::inv(Fq a) const {
  if (a.v == 0) throw std::domain_error("division by zero in F_q");
  return Fq{inv_[a.v]};
}

Fq GaloisField::pow(Fq a, unsigned long long e) const {
  Fq r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string GaloisField::to_string(Fq a) const {
  if (a.v == 0) return "0";
  if (a.v == 1) return "1";
  if (k_ == 1) return std::to_string(a.v);
  int l = log(a);
  return l == 1 ? std::string("g") : "g^" + std::to_string(l);
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (k_ > 1) {
    os << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (int d = k_; d >= 0; --d) {
      int c = conductor_[d];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (d == 0 || c != 1) os << c;
      if (d > 0) os << (c != 1 ? "*" : "") << "x" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    os << ")";
  }
  return os.str();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() != b.get() && !a->same_as(*b))
    throw std::invalid_argument("operands live over different finite fields");
}

}  // namespace dlang
