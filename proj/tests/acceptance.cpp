#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a3d/certificate.hpp"
#include "a3d/checks.hpp"
#include "a3d/crosscheck.hpp"
#include "a3d/engine.hpp"
#include "a3d/oracle.hpp"

using namespace a3d;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5};

Outcome witness_d1() {
  PrimeField F(3);
  A3dEngine<PrimeField> e(F, 1);
  bool zero = e.is_zero(witness_ad(F, 1));
  return {!zero, zero ? "a_1 vanishes" : "a_1 != 0 over F_3"};
}

Outcome nilpotency_d1() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint32_t p : {3u, 7u}) {
    A3dEngine<PrimeField> e(PrimeField(p), 1);
    auto r = e.nilpotency_degree(10);
    bool top_zero = r.graded_dims.size() >= 7 && r.graded_dims[6] == 0;
    ok = ok && r.degree == 7 && top_zero;
    out << "F_" << p << ": D_nil=" << r.degree << " dims";
    for (int k = 0; k < r.degree && k < static_cast<int>(r.graded_dims.size()); ++k) out << (k ? "," : " ") << r.graded_dims[static_cast<std::size_t>(k)];
    out << "; ";
  }
  out << "expected 7 at both";
  return {ok, out.str()};
}

Outcome witness_d2() {
  PrimeField F(3);
  A3dEngine<PrimeField> e(F, 2);
  auto a2 = witness_ad(F, 2);
  auto comps = a2.components(2);
  bool right_degree = comps.size() == 1 && comps.begin()->first == Multidegree{6, 2};
  bool zero = e.is_zero(a2);
  std::ostringstream out;
  out << "multidegree " << (right_degree ? "6,2" : "?") << ", quotient dim " << e.quotient_dimension(Multidegree{6, 2})
      << ", a_2 " << (zero ? "= 0" : "!= 0");
  return {right_degree && !zero, out.str()};
}

Outcome multilinear_d6() {
  A3dEngine<PrimeField> e(PrimeField(5), 6);
  auto q = e.quotient_dimension(Multidegree{1, 1, 1, 1, 1, 1});
  return {q == 0, "quotient dim " + std::to_string(q) + " over F_5"};
}

Outcome indecomposable_a1() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint64_t ch : {3ULL, 0ULL}) {
    double worst = 0;
    std::size_t agree = 0;
    with_eval_field(ch, [&](auto E) {
      PrimeField K3(3);
      for (std::uint64_t seed : kSeeds) {
        OracleOptions opts;
        opts.seed = seed;
        O3Oracle<decltype(E)> o(E, 1, opts);
        Verdict v = ch == 3 ? o.decomposable(tr(witness_ad(K3, 1)), Multidegree{6})
                            : o.decomposable(tr(witness_ad(RationalField{}, 1)), Multidegree{6});
        if (!v.decomposable) ++agree;
        worst = std::max(worst, v.error_bound);
      }
      out << E.name() << ": indecomposable " << agree << "/5 (error <= " << worst << "); ";
    });
    ok = ok && agree == 5;
  }
  auto cert = nilpotent_certificate();
  const std::string expect = "a^4b^2 (1+beta+gamma) + a^2b^4 (beta+gamma) = 0";
  bool cert_ok = cert.inconsistent && cert.pattern == expect;
  out << "certificate \"" << cert.pattern << "\"" << (cert.inconsistent ? " inconsistent" : " consistent");
  return {ok && cert_ok, out.str()};
}

Outcome dmax_d1() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint64_t ch : {3ULL, 7ULL}) {
    std::vector<int> found;
    double worst = 0;
    with_eval_field(ch, [&](auto E) {
      for (std::uint64_t seed : kSeeds) {
        OracleOptions opts;
        opts.seed = seed;
        O3Oracle<decltype(E)> o(E, 1, opts);
        auto r = o.dmax_scan(10);
        found.push_back(r.dmax);
        worst = std::max(worst, r.error_bound);
      }
      out << E.name() << ": dmax";
    });
    for (int v : found) {
      out << " " << v;
      ok = ok && v == 6;
    }
    out << " (error <= " << worst << "); ";
  }
  return {ok, out.str()};
}

Outcome sigma_relations() {
  std::ostringstream out;
  const PrimeField64 M = PrimeField64::mersenne61();
  std::mt19937_64 rng(7);
  std::size_t good = 0;
  bool high_zero = true;
  for (int i = 0; i < 20; ++i) {
    Mat3<PrimeField64> A, B;
    for (auto& x : A.a) x = M.random(rng);
    for (auto& x : B.a) x = M.random(rng);
    if (mat_sigma(M, 3, mat_mul(M, A, B)) == M.mul(mat_sigma(M, 3, A), mat_sigma(M, 3, B))) ++good;
    for (int t = 4; t <= 6; ++t) high_zero = high_zero && M.is_zero(mat_sigma(M, t, A));
  }
  out << "sigma3(AB)=sigma3(A)sigma3(B) at " << good << "/20 points; sigma_t(t>3) " << (high_zero ? "zero" : "NONZERO");
  std::size_t dec = 0;
  double worst = 0;
  O3Oracle<PrimeField64> o(M, 3, OracleOptions{});
  const RationalField Q;
  for (int i = 0; i < 10; ++i) {
    const Word a{Letter::from_code(static_cast<std::uint8_t>(rng() % 6))};
    const Word b{Letter::from_code(static_cast<std::uint8_t>(rng() % 6))};
    auto target = sigma_of(3, word_poly(Q, a * b));
    auto v = o.decomposable(target, multidegree(a * b, 3) * 3);
    if (v.decomposable) ++dec;
    worst = std::max(worst, v.error_bound);
  }
  out << "; sigma3(ab) decomposable " << dec << "/10 (error <= " << worst << ")";
  return {good == 20 && high_zero && dec == 10, out.str()};
}

Outcome sigma_tr_relation() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint64_t ch : {0ULL, 3ULL}) {
    with_eval_field(ch, [&](auto E) {
      O3Oracle<decltype(E)> o(E, 3, OracleOptions{});
      Verdict v = ch == 0 ? o.decomposable(build_sigma_tr(RationalField{}, 2, 1), Multidegree{2, 1, 1})
                          : o.decomposable(build_sigma_tr(PrimeField(3), 2, 1), Multidegree{2, 1, 1});
      ok = ok && v.decomposable;
      out << E.name() << ": " << (v.decomposable ? "decomposable" : "indecomposable") << " (" << v.candidates
          << " products, error <= " << v.error_bound << "); ";
    });
  }
  return {ok, out.str()};
}

Outcome trace_agreement() {
  PrimeField F(3);
  A3dEngine<PrimeField> engine(F, 2);
  ZechField G(3, 14);
  O3Oracle<ZechField> oracle(G, 3, OracleOptions{});
  std::mt19937_64 rng(1);
  std::size_t agree = 0, zeros = 0, total = 0;
  double worst = 0;
  while (total < 50) {
    const int deg = 2 + static_cast<int>(rng() % 5);
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(deg + 1));
    const Multidegree m{a, deg - a};
    const auto& words = engine.words_of(m);
    NCPoly<PrimeField> u(F);
    for (int k = 0, n = 1 + static_cast<int>(rng() % 4); k < n; ++k) u.add_term(words[rng() % words.size()], static_cast<std::uint32_t>(1 + rng() % 2));
    if (total % 2 == 0) u = u - engine.normal_form(u);
    if (u.is_zero()) continue;
    auto r = trace_crosscheck(engine, oracle, u, 3);
    ++total;
    if (r.agree) ++agree;
    if (r.zero) ++zeros;
    worst = std::max(worst, r.error_bound);
  }
  std::ostringstream out;
  out << agree << "/50 agree (" << zeros << " zero in A, error <= " << worst << ")";
  return {agree == 50, out.str()};
}

Outcome property_suites() {
  std::ostringstream out;
  bool ok = true;
  std::size_t props = 0, failed = 0;
  for (const auto& suite : default_check_suites())
    for (const auto& r : run_check_suite(suite, CheckOptions{})) {
      ++props;
      if (!r.passed) {
        ++failed;
        ok = false;
        out << suite << "/" << r.name << ": " << r.detail << "; ";
      }
    }
  out << props - failed << "/" << props << " properties pass";
  return {ok, out.str()};
}

std::vector<Criterion> criteria() {
  return {
      {1, "witness a_1 != 0 over F_3", 10, witness_d1},
      {2, "nilpotency degree 7 over F_3 and F_7 (d=1)", 60, nilpotency_d1},
      {3, "witness a_2 != 0 over F_3 at (6,2)", 600, witness_d2},
      {4, "x1...x6 = 0 over F_5", 1800, multilinear_d6},
      {5, "tr(a_1) indecomposable, char 3 and char 0", 60, indecomposable_a1},
      {6, "dmax = 6 at characteristics 3 and 7 (d=1)", 600, dmax_d1},
      {7, "sigma_3 multiplicativity and vanishing", 60, sigma_relations},
      {8, "sigma_{2,1} decomposable at (2,1,1)", 300, sigma_tr_relation},
      {9, "u = 0 iff tr(u x3) decomposable, 50 samples", 1800, trace_agreement},
      {10, "property suites", 900, property_suites},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    while (o.detail.size() >= 2 && o.detail.compare(o.detail.size() - 2, 2, "; ") == 0) o.detail.resize(o.detail.size() - 2);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_seconds;
    const bool pass = o.passed && in_budget;
    all_ok = all_ok && pass;
    std::printf("%s criterion %d: %s | %s | %.1fs (budget %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.budget_seconds, in_budget ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
