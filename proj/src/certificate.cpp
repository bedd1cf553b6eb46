#include "a3d/certificate.hpp"

#include <sstream>

#include "a3d/engine.hpp"

namespace a3d {

BiPoly BiPolyRing::add(const BiPoly& x, const BiPoly& y) const {
  BiPoly r = x;
  for (const auto& [m, c] : y) {
    auto& v = r[m];
    v += c;
    if (v == 0) r.erase(m);
  }
  return r;
}

BiPoly BiPolyRing::neg(const BiPoly& x) const {
  BiPoly r;
  for (const auto& [m, c] : x) r.emplace(m, -c);
  return r;
}

BiPoly BiPolyRing::mul(const BiPoly& x, const BiPoly& y) const {
  BiPoly r;
  for (const auto& [m, c] : x)
    for (const auto& [n, e] : y) {
      std::pair<int, int> k{m.first + n.first, m.second + n.second};
      auto& v = r[k];
      v += c * e;
      if (v == 0) r.erase(k);
    }
  return r;
}

BiPoly BiPolyRing::from_int(long long n) const {
  if (n == 0) return {};
  return {{{0, 0}, mpz_class(static_cast<long>(n))}};
}

BiPoly BiPolyRing::from_rational(const mpq_class& q) const {
  if (q.get_den() != 1) throw PreconditionError("Z[a,b] accepts only integer coefficients");
  if (q == 0) return {};
  return {{{0, 0}, q.get_num()}};
}

namespace {

std::string monomial_text(std::pair<int, int> m) {
  std::string s;
  if (m.first) s += m.first == 1 ? "a" : "a^" + std::to_string(m.first);
  if (m.second) s += m.second == 1 ? "b" : "b^" + std::to_string(m.second);
  return s.empty() ? "1" : s;
}

}  // namespace

std::string BiPolyRing::format(const BiPoly& x) const {
  if (x.empty()) return "0";
  std::string s;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class mag = abs(c);
    s += c < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
    bool unit = mag == 1 && (m.first || m.second);
    if (!unit) s += mag.get_str();
    if (m.first || m.second) s += monomial_text(m);
  }
  return s;
}

std::vector<SigmaMonomial> degree_below_six_generators() {
  const Word x = Word::letter(1), xt = Word::letter(1, true);
  return {
      SigmaMonomial({sigma_factor(1, x)}),
      SigmaMonomial({sigma_factor(2, x)}),
      SigmaMonomial({sigma_factor(3, x)}),
      SigmaMonomial({sigma_factor(1, x * xt)}),
      SigmaMonomial({sigma_factor(1, x * x * xt)}),
      SigmaMonomial({sigma_factor(1, x * x * xt * xt)}),
      SigmaMonomial({sigma_factor(2, x * xt)}),
  };
}

NilpotentCertificate nilpotent_certificate() {
  const BiPolyRing R;
  Mat3<BiPolyRing> X = mat_zero(R);
  X(0, 1) = BiPolyRing::a();
  X(1, 2) = BiPolyRing::b();
  const EvaluationPoint<BiPolyRing> pt = make_point<BiPolyRing>({X});
  auto eval_monomial = [&](const SigmaMonomial& m) {
    BiPoly v = R.one();
    for (const auto& f : m.factors()) v = R.mul(v, mat_sigma(R, f.t, eval_word(R, pt, f.arg)));
    return v;
  };

  NilpotentCertificate cert;
  cert.target = eval_sigma_poly(R, tr(witness_ad(RationalField{}, 1)), pt);

  std::vector<std::pair<SigmaMonomial, BiPoly>> live;
  for (const auto& g : degree_below_six_generators()) {
    BiPoly v = eval_monomial(g);
    if (v.empty())
      cert.vanishing.push_back(g);
    else
      live.emplace_back(g, v);
  }

  // Degree-6 products of the nonvanishing generators.
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      SigmaMonomial m;
      BiPoly v = R.one();
      for (std::size_t i : cur) {
        m = m * live[i].first;
        v = R.mul(v, live[i].second);
      }
      cert.unknowns.push_back({"", m, v});
      return;
    }
    for (std::size_t i = from; i < live.size(); ++i) {
      int deg = live[i].first.degree();
      if (deg > left) continue;
      cur.push_back(i);
      self(self, i, left - deg);
      cur.pop_back();
    }
  };
  rec(rec, 0, 6);

  const std::size_t n = cert.unknowns.size();
  auto row_for = [&](std::pair<int, int> m) -> std::vector<mpq_class>& {
    auto [it, inserted] = cert.equations.try_emplace(m, std::vector<mpq_class>(n + 1, 0));
    return it->second;
  };
  for (const auto& [m, c] : cert.target) row_for(m)[0] -= c;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [m, c] : cert.unknowns[k].value) row_for(m)[k + 1] += c;

  // Specialization b = 0 keeps only monomials free of b.
  std::vector<bool> forced(n, false);
  for (const auto& [m, row] : cert.equations) {
    if (m.second != 0) continue;
    std::size_t nonzero = 0, which = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (row[k + 1] != 0) {
        ++nonzero;
        which = k;
      }
    if (nonzero == 1 && row[0] == 0) forced[which] = true;
  }
  static const char* greek[] = {"alpha", "beta", "gamma", "delta", "epsilon"};
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (forced[k]) cert.unknowns[k].name = next < 5 ? greek[next++] : "c" + std::to_string(k);
  for (std::size_t k = 0; k < n; ++k)
    if (!forced[k]) cert.unknowns[k].name = next < 5 ? greek[next++] : "c" + std::to_string(k);
  for (std::size_t k = 0; k < n; ++k)
    if (forced[k]) cert.forced_zero.push_back(cert.unknowns[k].name);

  std::ostringstream pattern;
  bool first = true;
  for (auto it = cert.equations.rbegin(); it != cert.equations.rend(); ++it) {
    const auto& [m, row] = *it;
    std::string inner;
    auto put = [&](const mpq_class& c, const std::string& name) {
      if (c == 0) return;
      std::string mag = abs(c) == 1 && !name.empty() ? "" : mpq_class(abs(c)).get_str();
      inner += c < 0 ? "-" : (inner.empty() ? "" : "+");
      inner += mag + name;
    };
    put(row[0], "");
    for (std::size_t k = 0; k < n; ++k)
      if (!forced[k]) put(row[k + 1], cert.unknowns[k].name);
    if (inner.empty()) continue;
    pattern << (first ? "" : " + ") << monomial_text(m) << " (" << inner << ")";
    first = false;
  }
  cert.pattern = pattern.str() + " = 0";

  // Consistency of sum_k c_k P_k = target over Q.
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& [m, row] : cert.equations) rows.push_back(row);
  std::size_t rank = 0;
  bool contradiction = false;
  for (std::size_t col = 1; col <= n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      mpq_class f = rows[r][col] / rows[rank][col];
      for (std::size_t c = 0; c <= n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][0] != 0) contradiction = true;
  cert.inconsistent = contradiction;
  return cert;
}

}  // namespace a3d
