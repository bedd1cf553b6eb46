#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "a3d/matrix.hpp"

namespace a3d {

/// Integer polynomial in two commuting variables a, b.
using BiPoly = std::map<std::pair<int, int>, mpz_class>;

/// Ring of BiPoly values, usable wherever an evaluation field is expected
/// by the division-free matrix formulas.
class BiPolyRing {
 public:
  using value_type = BiPoly;

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Z[a,b]"; }
  value_type zero() const { return {}; }
  value_type one() const { return {{{0, 0}, 1}}; }
  bool is_zero(const value_type& x) const { return x.empty(); }
  value_type add(const value_type& x, const value_type& y) const;
  value_type neg(const value_type& x) const;
  value_type sub(const value_type& x, const value_type& y) const { return add(x, neg(y)); }
  value_type mul(const value_type& x, const value_type& y) const;
  value_type from_int(long long n) const;
  value_type from_rational(const mpq_class& q) const;
  std::string format(const value_type& x) const;

  static value_type a() { return {{{1, 0}, 1}}; }
  static value_type b() { return {{{0, 1}, 1}}; }
};

/// Symbolic evaluation of the restricted membership system at
/// X = [[0,a,0],[0,0,b],[0,0,0]]: the target tr(x1^2 bar(x1)^2 x1 bar(x1)) is
/// matched against all degree-6 products of the listed lower generators.
struct NilpotentCertificate {
  struct Unknown {
    std::string name;
    SigmaMonomial product;
    BiPoly value;
  };
  /// Generators that vanish identically at X.
  std::vector<SigmaMonomial> vanishing;
  /// Products of nonvanishing generators, with their values at X.
  std::vector<Unknown> unknowns;
  BiPoly target;
  /// Coefficient rows per monomial a^i b^j: (constant, coefficient per unknown)
  /// of  sum_k c_k P_k - target.
  std::map<std::pair<int, int>, std::vector<mpq_class>> equations;
  /// Unknowns forced to zero by the specialization b = 0.
  std::vector<std::string> forced_zero;
  /// The remaining equations after those unknowns are set to zero.
  std::string pattern;
  bool inconsistent = false;
};

/// The generator list below degree 6 for d = 1.
std::vector<SigmaMonomial> degree_below_six_generators();

NilpotentCertificate nilpotent_certificate();

}  // namespace a3d
