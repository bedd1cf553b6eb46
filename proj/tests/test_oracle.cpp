#include <doctest.h>

#include <random>

#include "a3d/certificate.hpp"
#include "a3d/crosscheck.hpp"
#include "a3d/engine.hpp"
#include "a3d/oracle.hpp"

using namespace a3d;

namespace {

using E64 = PrimeField64;
const E64 M61 = PrimeField64::mersenne61();
const RationalField Q;

Mat3<E64> random_mat(std::mt19937_64& rng) {
  Mat3<E64> m;
  for (auto& x : m.a) x = M61.random(rng);
  return m;
}

SigmaPoly<RationalField> S(int t, const char* w) { return SigmaPoly<RationalField>::symbol(Q, t, parse_word(w)); }

}  // namespace

TEST_CASE("matrix invariants") {
  const auto& f = M61;
  CHECK(mat_sigma2(f, mat_identity(f)) == 3);
  CHECK(mat_trace(f, mat_identity(f)) == 3);
  CHECK(mat_det(f, mat_identity(f)) == 1);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    auto A = random_mat(rng), B = random_mat(rng);
    CHECK(mat_sigma(f, 3, mat_mul(f, A, B)) == f.mul(mat_sigma(f, 3, A), mat_sigma(f, 3, B)));
    CHECK(mat_sigma(f, 4, A) == 0);
    auto s1 = mat_trace(f, A), s2 = mat_sigma2(f, A), s3 = mat_det(f, A);
    auto A2 = mat_mul(f, A, A), A3 = mat_mul(f, A2, A);
    auto ch = mat_add(f, mat_add(f, A3, mat_scale(f, f.neg(s1), A2)), mat_add(f, mat_scale(f, s2, A), mat_scale(f, f.neg(s3), mat_identity(f))));
    CHECK(ch.a == mat_zero(f).a);
    CHECK(mat_trace(f, A2) == f.sub(f.mul(s1, s1), f.mul(2, s2)));
    CHECK(mat_trace(f, A3) == f.add(f.sub(f.pow(s1, 3), f.mul(3, f.mul(s1, s2))), f.mul(3, s3)));
    CHECK(mat_sigma(f, 2, mat_transpose(A)) == s2);
  }
}

TEST_CASE("evaluation fields") {
  auto c0 = choose_eval_field(0);
  CHECK(c0.kind == EvalFieldChoice::Kind::Prime64);
  CHECK(c0.p == (1ULL << 61) - 1);
  auto c3 = choose_eval_field(3);
  CHECK(c3.kind == EvalFieldChoice::Kind::Zech);
  CHECK(c3.p == 3);
  CHECK(c3.k == 14);
  CHECK(choose_eval_field(7).k == 8);
  CHECK_THROWS_AS(choose_eval_field(2), CharacteristicTwoError);

  ZechField g(3, 4);
  CHECK(g.size() == 81);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto a = g.random(rng), b = g.random(rng), c = g.random(rng);
    CHECK(g.mul(a, g.add(b, c)) == g.add(g.mul(a, b), g.mul(a, c)));
    CHECK(g.add(a, g.neg(a)) == g.zero());
    if (!g.is_zero(a)) CHECK(g.mul(a, g.inv(a)) == g.one());
  }
  CHECK(g.from_int(3) == g.zero());
  CHECK(g.add(g.one(), g.add(g.one(), g.one())) == g.zero());
}

TEST_CASE("generator catalog") {
  auto cat = generator_catalog(1, 3);
  REQUIRE(cat.size() == 5);
  CHECK(cat[0].t == 1);
  CHECK(cat[0].w == parse_word("x1"));
  for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].degree <= cat[i].degree);
  for (const auto& e : cat) {
    CHECK(is_primitive(e.w));
    CHECK(class_rep(e.w) == e.w);
    CHECK(e.degree == e.t * static_cast<int>(e.w.size()));
  }
  auto at = catalog_at(Multidegree{1, 1});
  REQUIRE(at.size() == 2);
  CHECK(at[0].w == parse_word("x1 x2"));
  CHECK(at[1].w == parse_word("x1 x2'"));
}

TEST_CASE("decomposability examples over the Mersenne field") {
  O3Oracle<E64> o(M61, 2, OracleOptions{});
  auto v = o.decomposable(S(1, "x2 x1^3"), Multidegree{3, 1});
  CHECK(v.decomposable);
  CHECK(v.error_bound < 1e-6);
  CHECK_FALSE(o.decomposable(S(2, "x1"), Multidegree{2, 0}).decomposable);
  CHECK(o.decomposable(S(1, "x1") * S(1, "x2"), Multidegree{1, 1}).decomposable);
  CHECK_FALSE(o.decomposable(S(1, "x1 x2"), Multidegree{1, 1}).decomposable);
  CHECK(o.decomposable(S(3, "x1 x2") - S(3, "x1") * S(3, "x2"), Multidegree{3, 3}).decomposable);
  CHECK_THROWS_AS(o.decomposable(S(1, "x1"), Multidegree{2, 0}), PreconditionError);
  CHECK_THROWS_AS(o.decomposable(S(1, "x3"), Multidegree{0, 0, 1}), PreconditionError);
}

TEST_CASE("user sample count that is too small is rejected") {
  OracleOptions opts;
  opts.samples = 4;
  O3Oracle<E64> o(M61, 2, opts);
  CHECK_THROWS_AS(o.decomposable(S(1, "x2 x1^3"), Multidegree{3, 1}), PreconditionError);
}

TEST_CASE("verdicts do not depend on the thread count") {
  OracleOptions one, four;
  one.threads = 1;
  four.threads = 4;
  O3Oracle<E64> a(M61, 1, one), b(M61, 1, four);
  CHECK(a.evaluate(S(1, "x1^2 x1'")) == b.evaluate(S(1, "x1^2 x1'")));
  CHECK(a.dmax_scan(5).new_generators == b.dmax_scan(5).new_generators);
}

TEST_CASE("homogeneous component extraction") {
  const auto& f = M61;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto A = random_mat(rng), B = random_mat(rng);
    auto comb = [&](const std::vector<std::uint64_t>& w) {
      return mat_add(f, mat_scale(f, w[0], A), mat_scale(f, w[1], B));
    };
    auto tr_sq = extract_component(f, std::function<std::vector<std::uint64_t>(const std::vector<std::uint64_t>&)>(
                                          [&](const std::vector<std::uint64_t>& w) {
                                            auto C = comb(w);
                                            return std::vector<std::uint64_t>{mat_trace(f, mat_mul(f, C, C))};
                                          }),
                                   {2, 2}, {1, 1});
    CHECK(tr_sq[0] == f.add(mat_trace(f, mat_mul(f, A, B)), mat_trace(f, mat_mul(f, B, A))));
    auto s2 = extract_component(f, std::function<std::vector<std::uint64_t>(const std::vector<std::uint64_t>&)>(
                                       [&](const std::vector<std::uint64_t>& w) {
                                         return std::vector<std::uint64_t>{mat_sigma2(f, comb(w))};
                                       }),
                                {2, 2}, {1, 1});
    CHECK(s2[0] == f.sub(f.mul(mat_trace(f, A), mat_trace(f, B)), mat_trace(f, mat_mul(f, A, B))));
    auto s2t = extract_component(f, std::function<std::vector<std::uint64_t>(const std::vector<std::uint64_t>&)>(
                                        [&](const std::vector<std::uint64_t>& w) {
                                          auto C = mat_add(f, mat_scale(f, w[0], mat_transpose(B)), mat_scale(f, w[1], mat_transpose(A)));
                                          return std::vector<std::uint64_t>{mat_sigma2(f, C)};
                                        }),
                                 {2, 2}, {1, 1});
    CHECK(s2t == s2);
  }
  CHECK_THROWS_AS(extract_component(f, std::function<std::vector<std::uint64_t>(const std::vector<std::uint64_t>&)>(
                                           [](const std::vector<std::uint64_t>&) { return std::vector<std::uint64_t>{0}; }),
                                    {1}, {2}),
                  PreconditionError);
}

TEST_CASE("symbolic evaluation at the nilpotent point") {
  BiPolyRing R;
  Mat3<BiPolyRing> X = mat_zero(R);
  X(0, 1) = BiPolyRing::a();
  X(1, 2) = BiPolyRing::b();
  auto pt = make_point<BiPolyRing>({X});
  auto a2 = R.mul(BiPolyRing::a(), BiPolyRing::a()), b2 = R.mul(BiPolyRing::b(), BiPolyRing::b());
  CHECK(eval_sigma_poly(R, S(1, "x1 x1'"), pt) == R.add(a2, b2));
  CHECK(eval_sigma_poly(R, S(1, "x1^2 x1'^2"), pt) == R.mul(a2, b2));
  CHECK(eval_sigma_poly(R, S(2, "x1 x1'"), pt) == R.mul(a2, b2));
  CHECK(eval_sigma_poly(R, S(1, "x1"), pt).empty());

  auto cert = nilpotent_certificate();
  CHECK(cert.inconsistent);
  CHECK(cert.pattern == "a^4b^2 (1+beta+gamma) + a^2b^4 (beta+gamma) = 0");
  CHECK_FALSE(degree_below_six_generators().empty());
}

TEST_CASE("zero tests agree with trace decomposability") {
  PrimeField F(3);
  A3dEngine<PrimeField> engine(F, 2);
  ZechField g(3, 14);
  O3Oracle<ZechField> oracle(g, 2, OracleOptions{});
  auto x2 = letter_poly(F, 2);
  auto zero = trace_crosscheck(engine, oracle, x2.pow(3), 1);
  CHECK(zero.zero);
  CHECK(zero.decomposable);
  CHECK(zero.agree);
  CHECK(zero.delta == Multidegree{1, 3});
  auto nonzero = trace_crosscheck(engine, oracle, x2 * x2.transpose(), 1);
  CHECK_FALSE(nonzero.zero);
  CHECK(nonzero.agree);
  CHECK_THROWS_AS(trace_crosscheck(engine, oracle, letter_poly(F, 1), 1), PreconditionError);
  CHECK_THROWS_AS(trace_crosscheck(engine, oracle, x2, 3), PreconditionError);
  CHECK_THROWS_AS(trace_crosscheck(engine, oracle, x2 + x2.pow(2), 1), PreconditionError);
}
