#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "a3d/field.hpp"

namespace a3d {

/// F_p for an odd prime p < 2^63, used for sample points.
class PrimeField64 {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField64(std::uint64_t p);
  /// The Mersenne prime 2^61 - 1, the default for characteristic 0.
  static PrimeField64 mersenne61() { return PrimeField64((1ULL << 61) - 1); }

  std::uint64_t characteristic() const { return p_; }
  /// Number of elements, as used in error bounds.
  double size() const { return static_cast<double>(p_); }
  std::string name() const { return "F_" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type inv(value_type a) const;
  value_type from_int(long long n) const;
  value_type from_rational(const mpq_class& q) const;
  /// Distinct elements for i < size().
  value_type element(std::uint64_t i) const { return i % p_; }

  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
  }
  /// Symmetric residue, so p - 1 prints as -1.
  std::string format(value_type a) const { return a > p_ / 2 ? "-" + std::to_string(p_ - a) : std::to_string(a); }

 private:
  std::uint64_t p_;
};

/// GF(p^k) with elements stored as discrete logarithms of a primitive
/// element; addition goes through a Zech logarithm table.
class ZechField {
 public:
  using value_type = std::uint32_t;

  ZechField(std::uint32_t p, int k);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  double size() const { return static_cast<double>(q_); }
  std::string name() const { return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")"; }

  value_type zero() const { return zero_; }
  value_type one() const { return 0; }
  bool is_zero(value_type a) const { return a == zero_; }
  value_type mul(value_type a, value_type b) const {
    if (a == zero_ || b == zero_) return zero_;
    std::uint32_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  value_type add(value_type a, value_type b) const {
    if (a == zero_) return b;
    if (b == zero_) return a;
    std::uint32_t n = b >= a ? b - a : b + order_ - a;
    std::uint32_t z = (*zech_)[n];
    if (z == zero_) return zero_;
    std::uint32_t s = a + z;
    return s >= order_ ? s - order_ : s;
  }
  value_type neg(value_type a) const {
    if (a == zero_) return zero_;
    std::uint32_t s = a + order_ / 2;
    return s >= order_ ? s - order_ : s;
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;
  value_type from_int(long long n) const;
  value_type from_rational(const mpq_class& q) const;
  value_type element(std::uint64_t i) const { return i == 0 ? zero_ : static_cast<value_type>((i - 1) % order_); }

  template <class Rng>
  value_type random(Rng& rng) const {
    return static_cast<value_type>(std::uniform_int_distribution<std::uint32_t>(0, order_)(rng));
  }
  std::string format(value_type a) const { return a == zero_ ? "0" : "g^" + std::to_string(a); }

  /// Coefficients (constant first) of the primitive polynomial used.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

 private:
  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  std::uint32_t order_;  // q - 1
  std::uint32_t zero_;   // sentinel, equals order_
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const std::vector<std::uint32_t>> zech_;
  std::vector<std::uint32_t> prime_logs_;  // log of 1..p-1
};

/// The field used to sample points for a given characteristic.
struct EvalFieldChoice {
  enum class Kind { Prime64, Zech } kind = Kind::Prime64;
  std::uint64_t p = 0;
  int k = 1;
};

/// char 0 -> F_{2^61-1}; p >= 2^22 -> F_p; otherwise GF(p^k) with the least
/// k reaching 2^22 elements while the table stays within 2^23 entries
/// (falling back to the largest k within the limit).
EvalFieldChoice choose_eval_field(std::uint64_t characteristic);

/// Calls fn(E) with the evaluation field chosen for the characteristic.
template <class Fn>
decltype(auto) with_eval_field(std::uint64_t characteristic, Fn&& fn) {
  EvalFieldChoice c = choose_eval_field(characteristic);
  if (c.kind == EvalFieldChoice::Kind::Zech) return fn(ZechField(static_cast<std::uint32_t>(c.p), c.k));
  return fn(PrimeField64(c.p));
}

}  // namespace a3d
