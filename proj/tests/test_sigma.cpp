#include <doctest.h>

#include <random>

#include "a3d/parse.hpp"
#include "a3d/sigma.hpp"

using namespace a3d;

namespace {

const RationalField Q;

SigmaPoly<RationalField> S(int t, const char* w) { return SigmaPoly<RationalField>::symbol(Q, t, parse_word(w)); }

}  // namespace

TEST_CASE("sigma_{t,r} small cases") {
  CHECK(build_sigma_tr(Q, 0, 0) == SigmaPoly<RationalField>::constant(Q, 1));

  auto d10 = sigma_tr_data(1, 0);
  REQUIRE(d10.size() == 1);
  CHECK(d10[0].word == parse_word("x1"));
  CHECK(d10[0].j == 1);
  CHECK(d10[0].xi == 2);
  CHECK(build_sigma_tr(Q, 1, 0) == S(1, "x1"));

  auto d40 = sigma_tr_data(4, 0);
  bool found = false;
  for (const auto& a : d40)
    if (a.word == parse_word("x1") && a.j == 4) {
      found = true;
      CHECK(a.xi == 8);
    }
  CHECK(found);
  CHECK(build_sigma_tr(Q, 4, 0).terms().count(SigmaMonomial({sigma_factor(4, parse_word("x1"))})) == 1);

  CHECK_THROWS_AS(build_sigma_tr(Q, -1, 0), PreconditionError);
  for (const auto& m : build_sigma_tr(Q, 2, 1).components(3)) CHECK(m.first == Multidegree{2, 1, 1});
}

TEST_CASE("follow constraint") {
  const Letter x1(1, false), x1t(1, true), x2(2, false), x2t(2, true), x3(3, false), x3t(3, true);
  for (Letter a : {x1, x3, x3t}) {
    CHECK(sigma_tr_follows(a, x1));
    CHECK(sigma_tr_follows(a, x2));
    CHECK(sigma_tr_follows(a, x2t));
    CHECK_FALSE(sigma_tr_follows(a, x1t));
    CHECK_FALSE(sigma_tr_follows(a, x3));
  }
  for (Letter a : {x1t, x2, x2t}) {
    CHECK(sigma_tr_follows(a, x1t));
    CHECK(sigma_tr_follows(a, x3));
    CHECK(sigma_tr_follows(a, x3t));
    CHECK_FALSE(sigma_tr_follows(a, x1));
  }
}

TEST_CASE("trace symbols") {
  auto x1 = letter_poly(Q, 1), x2 = letter_poly(Q, 2);
  CHECK(tr(x1 - x1.transpose()).is_zero());
  CHECK(tr(x2 * x1) == tr(x1 * x2));
  CHECK(tr(x1.bar() * x2).size() == 2);
  CHECK(tr(x1 * x2 * x2.transpose()) == tr(x2 * x2.transpose() * x1));
  CHECK(sigma_of(2, x1.scaled(3)) == S(2, "x1").scaled(9));
  CHECK_THROWS_AS(sigma_of(2, x1 + x2), PreconditionError);
  CHECK_THROWS_AS(sigma_of(0, x1), PreconditionError);
  CHECK(sigma_factor(1, parse_word("x2 x1")).arg == parse_word("x1 x2"));
}

TEST_CASE("substitute_args") {
  CHECK(substitute_args(S(1, "x1 x2"), {{1, parse_word("x3")}}) == S(1, "x3 x2"));
  CHECK(substitute_args(S(1, "x1'"), {{1, parse_word("x2 x3")}}) == S(1, "x2 x3"));
  CHECK(substitute_args(S(2, "x1") * S(1, "x2"), {{2, parse_word("x1")}}) == S(2, "x1") * S(1, "x1"));
  CHECK_THROWS_AS(substitute_args(S(1, "x1"), {{1, Word{}}}), PreconditionError);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Word arg;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 4); k < n; ++k)
      arg.push_back(Letter::from_code(static_cast<std::uint8_t>(rng() % 4)));
    std::map<int, Word> img;
    for (int k = 1; k <= 2; ++k)
      for (int j = 0, n = 1 + static_cast<int>(rng() % 3); j < n; ++j)
        img[k].push_back(Letter::from_code(static_cast<std::uint8_t>(rng() % 6)));
    const int t = 1 + static_cast<int>(rng() % 3);
    auto out = substitute_args(SigmaPoly<RationalField>::symbol(Q, t, arg), img);
    Multidegree expect(3);
    const Multidegree m = multidegree(arg, 2);
    for (int k = 1; k <= 2; ++k) expect = expect + multidegree(img[k], 3) * (m[static_cast<std::size_t>(k - 1)] * t);
    REQUIRE(out.size() == 1);
    CHECK(out.terms().begin()->first.multidegree(3) == expect);
  }
}

TEST_CASE("sigma monomials") {
  auto m = S(1, "x1") * S(2, "x1 x2");
  REQUIRE(m.size() == 1);
  const auto& mono = m.terms().begin()->first;
  CHECK(mono.degree() == 5);
  CHECK(mono.multidegree(2) == Multidegree{3, 2});
  CHECK(S(1, "x1") * S(2, "x2") == S(2, "x2") * S(1, "x1"));
  CHECK(format_sigma(S(1, "x2 x1")) == format_sigma(S(1, "x1 x2")));
}
