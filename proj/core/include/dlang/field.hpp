#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dlang {

/// An element of F_q, stored as its index in the field's fixed enumeration.
///
/// The index of c_0 + c_1 X + ... + c_{k-1} X^{k-1} (mod the conductor) is
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Index 0 is zero and index 1 is one.
/// That index also fixes the canonical ordering used by every enumeration.
struct Fq {
  std::uint8_t v = 0;

  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// The finite field F_q with q = p^k <= 256, realised through full
/// addition / multiplication tables.
class GaloisField {
 public:
  /// Uses the built-in conductor for (p, k).
  static FieldPtr make(int p, int k = 1);
  /// `conductor` holds the coefficients (low to high) of a monic degree-k
  /// polynomial over F_p; it must be irreducible.
  static FieldPtr make(int p, int k, std::vector<int> conductor);

  /// Built-in conductor for (p, k), or an empty vector when none is tabled.
  static std::vector<int> default_conductor(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& conductor() const { return conductor_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  /// Image of an integer in the prime subfield.
  Fq from_int(long long n) const;
  /// Element with index `i` (0 <= i < q).
  Fq element(int i) const;

  /// Fixed primitive element used by the `g^i` literal syntax. For the
  /// built-in conductors this is the class of X.
  Fq generator() const { return generator_; }
  Fq generator_power(long long i) const;
  /// Discrete logarithm base generator(); x must be nonzero.
  int log(Fq x) const;

  Fq add(Fq a, Fq b) const { return Fq{add_[idx(a, b)]}; }
  Fq sub(Fq a, Fq b) const { return Fq{add_[idx(a, Fq{neg_[b.v]})]}; }
  Fq mul(Fq a, Fq b) const { return Fq{mul_[idx(a, b)]}; }
  Fq neg(Fq a) const { return Fq{neg_[a.v]}; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, unsigned long long e) const;

  /// `0`, `1`, an integer for prime fields, `g^i` otherwise.
  std::string to_string(Fq a) const;

  /// Human-readable "F_q" description including the conductor when k > 1.
  std::string describe() const;

  bool same_as(const GaloisField& o) const {
    return p_ == o.p_ && k_ == o.k_ && conductor_ == o.conductor_;
  }

  // Raw table rows; used by the polynomial kernels.
  const std::uint8_t* add_row(Fq a) const { return add_.data() + a.v * q_; }
  const std::uint8_t* mul_row(Fq a) const { return mul_.data() + a.v * q_; }

 private:
  GaloisField(int p, int k, std::vector<int> conductor);
  std::size_t idx(Fq a, Fq b) const { return static_cast<std::size_t>(a.v) * q_ + b.v; }

  int p_;
  int k_;
  int q_;
  std::vector<int> conductor_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
  std::vector<int> log_;
  std::vector<std::uint8_t> exp_;
  Fq generator_;
};

void require_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace dlang
