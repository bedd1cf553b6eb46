#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "a3d/errors.hpp"

namespace a3d {

bool is_prime(std::uint64_t n);

/// The prime field F_p for an odd prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;

  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  /// Reduces a rational; throws if the denominator vanishes mod p.
  value_type from_rational(const mpq_class& q) const;
  mpq_class to_rational(value_type a) const { return mpq_class(static_cast<unsigned long>(a)); }

  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng);
  }

  std::string format(value_type a) const { return std::to_string(a); }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, exact via GMP. Intended for small instances only.
class RationalField {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type pow(const value_type& a, std::uint64_t e) const;

  value_type from_int(long long n) const { return mpq_class(static_cast<long>(n)); }
  value_type from_rational(const mpq_class& q) const { return q; }
  mpq_class to_rational(const value_type& a) const { return a; }

  template <class Rng>
  value_type random(Rng& rng) const {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
  }

  std::string format(const value_type& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

/// Runtime description of a coefficient field: characteristic 0 means Q.
struct CoeffField {
  std::uint64_t characteristic = 0;

  static CoeffField rationals() { return {0}; }
  static CoeffField prime(std::uint64_t p);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const { return is_rational() ? "Q" : "F_" + std::to_string(characteristic); }
};

/// Validates a user-supplied characteristic: 0 or an odd prime below 2^31.
CoeffField parse_characteristic(long long c);

}  // namespace a3d
