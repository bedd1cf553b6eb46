#include "a3d/evalfield.hpp"

#include <map>
#include <mutex>

namespace a3d {

PrimeField64::PrimeField64(std::uint64_t p) : p_(p) {
  if (p == 2) throw CharacteristicTwoError();
  if (p >= (1ULL << 63) || !is_prime(p)) throw PreconditionError("evaluation field needs an odd prime, got " + std::to_string(p));
}

PrimeField64::value_type PrimeField64::pow(value_type a, std::uint64_t e) const {
  value_type r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField64::value_type PrimeField64::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

PrimeField64::value_type PrimeField64::from_int(long long n) const {
  __int128 r = static_cast<__int128>(n) % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField64::value_type PrimeField64::from_rational(const mpq_class& q) const {
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, -1, sizeof(p_), 0, 0, &p_);
  mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0) throw PreconditionError("denominator vanishes in " + name());
  auto to_u64 = [](const mpz_class& z) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
  };
  return mul(to_u64(num), inv(to_u64(den)));
}

namespace {

using Poly = std::vector<std::uint32_t>;  // length k, constant term first

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// a * b modulo the monic polynomial x^k + sum f[i] x^i over F_p.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size();
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  for (std::size_t i = 2 * k - 1; i-- > k;) {
    std::uint64_t top = prod[i];
    if (!top) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - f[j]) * top) % p;
  }
  Poly r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

Poly x_power(std::uint64_t e, const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size();
  Poly r(k, 0), b(k, 0);
  r[0] = 1;
  if (k == 1) {
    b[0] = (p - f[0]) % p;
  } else {
    b[1] = 1;
  }
  while (e) {
    if (e & 1) r = mulmod(r, b, f, p);
    b = mulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

Poly find_primitive(std::uint32_t p, int k, std::uint64_t q) {
  const auto factors = prime_factors(q - 1);
  Poly f(static_cast<std::size_t>(k), 0);
  for (std::uint64_t code = 1;; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (c) throw std::logic_error("no primitive polynomial found");
    if (f[0] == 0) continue;
    if (!is_one(x_power(q - 1, f, p))) continue;
    bool primitive = true;
    for (std::uint64_t l : factors)
      if (is_one(x_power((q - 1) / l, f, p))) {
        primitive = false;
        break;
      }
    if (primitive) return f;
  }
}

struct ZechTables {
  Poly modulus;
  std::shared_ptr<const std::vector<std::uint32_t>> zech;
  std::vector<std::uint32_t> prime_logs;
};

ZechTables build_tables(std::uint32_t p, int k, std::uint32_t q) {
  ZechTables t;
  t.modulus = find_primitive(p, k, q);
  const std::uint32_t order = q - 1;
  std::vector<std::uint32_t> enc_of(order), log_of(q, order);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
  digits[0] = 1;
  std::vector<std::uint32_t> pw(static_cast<std::size_t>(k));
  pw[0] = 1;
  for (int i = 1; i < k; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * p;
  for (std::uint32_t n = 0; n < order; ++n) {
    std::uint32_t enc = 0;
    for (int i = 0; i < k; ++i) enc += digits[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(i)];
    enc_of[n] = enc;
    log_of[enc] = n;
    // multiply by x
    std::uint32_t top = digits[static_cast<std::size_t>(k - 1)];
    for (int i = k - 1; i > 0; --i) digits[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i - 1)];
    digits[0] = 0;
    for (int i = 0; i < k; ++i) {
      auto& dg = digits[static_cast<std::size_t>(i)];
      dg = static_cast<std::uint32_t>((dg + static_cast<std::uint64_t>(p - t.modulus[static_cast<std::size_t>(i)]) * top) % p);
    }
  }
  auto zech = std::make_shared<std::vector<std::uint32_t>>(order);
  for (std::uint32_t n = 0; n < order; ++n) {
    std::uint32_t enc = enc_of[n];
    std::uint32_t d0 = enc % p;
    std::uint32_t shifted = enc - d0 + (d0 + 1) % p;
    (*zech)[n] = log_of[shifted];
  }
  t.zech = std::move(zech);
  t.prime_logs.resize(p);
  for (std::uint32_t m = 1; m < p; ++m) t.prime_logs[m] = log_of[m];
  return t;
}

const ZechTables& tables_for(std::uint32_t p, int k, std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, ZechTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_tables(p, k, q)).first;
  return it->second;
}

constexpr std::uint64_t kTableLimit = 1ULL << 23;
constexpr std::uint64_t kTargetSize = 1ULL << 22;

}  // namespace

ZechField::ZechField(std::uint32_t p, int k) : p_(p), k_(k) {
  if (p == 2) throw CharacteristicTwoError();
  if (!is_prime(p) || k < 1) throw PreconditionError("GF(p^k) needs an odd prime p and k >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kTableLimit) throw PreconditionError("GF(p^k) table would exceed 2^23 entries");
  }
  q_ = static_cast<std::uint32_t>(q);
  order_ = q_ - 1;
  zero_ = order_;
  const auto& t = tables_for(p, k, q_);
  modulus_ = t.modulus;
  zech_ = t.zech;
  prime_logs_ = t.prime_logs;
}

ZechField::value_type ZechField::inv(value_type a) const {
  if (a == zero_) throw std::domain_error("inverse of zero");
  return a == 0 ? 0 : order_ - a;
}

ZechField::value_type ZechField::pow(value_type a, std::uint64_t e) const {
  if (a == zero_) return e == 0 ? one() : zero_;
  return static_cast<value_type>((static_cast<unsigned __int128>(a) * e) % order_);
}

ZechField::value_type ZechField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return r == 0 ? zero_ : prime_logs_[static_cast<std::size_t>(r)];
}

ZechField::value_type ZechField::from_rational(const mpq_class& q) const {
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0) throw PreconditionError("denominator vanishes in " + name());
  return mul(from_int(static_cast<long long>(num)), inv(from_int(static_cast<long long>(den))));
}

EvalFieldChoice choose_eval_field(std::uint64_t characteristic) {
  if (characteristic == 0) return {EvalFieldChoice::Kind::Prime64, (1ULL << 61) - 1, 1};
  if (characteristic == 2) throw CharacteristicTwoError();
  if (!is_prime(characteristic)) throw PreconditionError("characteristic must be prime, got " + std::to_string(characteristic));
  if (characteristic >= kTargetSize) return {EvalFieldChoice::Kind::Prime64, characteristic, 1};
  int k = 0;
  std::uint64_t q = 1;
  while (q < kTargetSize) {
    q *= characteristic;
    ++k;
  }
  if (q > kTableLimit) --k;
  if (k <= 1) return {EvalFieldChoice::Kind::Prime64, characteristic, 1};
  return {EvalFieldChoice::Kind::Zech, characteristic, k};
}

}  // namespace a3d
