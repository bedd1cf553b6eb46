#include "a3d/field.hpp"

namespace a3d {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) throw CharacteristicTwoError();
  if (p >= (1U << 31) || !is_prime(p)) throw PreconditionError("F_p requires an odd prime p < 2^31, got " + std::to_string(p));
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& q) const {
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0) throw PreconditionError("denominator vanishes in " + name());
  return mul(static_cast<value_type>(num), inv(static_cast<value_type>(den)));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  return 1 / a;
}

RationalField::value_type RationalField::pow(const value_type& a, std::uint64_t e) const {
  value_type r = 1, b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

CoeffField CoeffField::prime(std::uint64_t p) {
  if (p == 2) throw CharacteristicTwoError();
  if (!is_prime(p)) throw PreconditionError("characteristic must be prime, got " + std::to_string(p));
  return {p};
}

CoeffField parse_characteristic(long long c) {
  if (c == 0) return CoeffField::rationals();
  if (c == 2) throw CharacteristicTwoError();
  if (c < 0 || c >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(c)))
    throw PreconditionError("characteristic must be 0 or an odd prime below 2^31, got " + std::to_string(c));
  return {static_cast<std::uint64_t>(c)};
}

}  // namespace a3d
