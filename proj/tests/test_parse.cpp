#include <doctest.h>

#include <random>

#include "a3d/parse.hpp"

using namespace a3d;

namespace {

const RationalField Q;

NCPoly<RationalField> W(const char* w) { return NCPoly<RationalField>::monomial(Q, parse_word(w)); }

std::string random_expr(std::mt19937_64& rng, int depth) {
  auto atom = [&] {
    std::string s = "x" + std::to_string(1 + rng() % 3);
    if (rng() % 3 == 0) s += "'";
    if (rng() % 4 == 0) s += "^" + std::to_string(2 + rng() % 2);
    return s;
  };
  if (depth == 0) return atom();
  switch (rng() % 5) {
    case 0: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 1: return random_expr(rng, depth - 1) + " - " + std::to_string(1 + rng() % 4) + "/" + std::to_string(1 + rng() % 3) + "*" + atom();
    case 2: return "(" + random_expr(rng, depth - 1) + ")*" + atom();
    case 3: return "bar(" + random_expr(rng, depth - 1) + ")";
    default: return atom() + " " + random_expr(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("word polynomial expressions") {
  CHECK(parse_ncpoly("x1^2 * x2'") == W("x1^2 x2'"));
  CHECK(parse_ncpoly("x1 x2 - x1*x2").is_zero());
  CHECK(parse_ncpoly("bar(x1)^3").size() == 8);
  CHECK(parse_ncpoly("bar(x1)") == W("x1") - W("x1'"));
  CHECK(parse_ncpoly("(x1 x2)'") == W("x2' x1'"));
  CHECK(parse_ncpoly("1/2 x1 + 3/2*x1") == W("x1").scaled(2));
  CHECK(format_poly(parse_ncpoly("x1 - 2*x2'")) == format_poly(W("x1") - W("x2'").scaled(2)));
}

TEST_CASE("sigma expressions") {
  CHECK(parse_sigma("tr(x1*x2) - tr(x2*x1)").is_zero());
  CHECK(parse_sigma("tr(x1 - x1')").is_zero());
  CHECK(parse_sigma("s2(x1)") == SigmaPoly<RationalField>::symbol(Q, 2, parse_word("x1")));
  CHECK(parse_sigma("st(3, x1 x2)") == SigmaPoly<RationalField>::symbol(Q, 3, parse_word("x1 x2")));
  CHECK(parse_sigma("tr(x1) tr(x2)") == parse_sigma("tr(x2)*tr(x1)"));
  CHECK(parse_sigma("2") == SigmaPoly<RationalField>::constant(Q, 2));
  CHECK(parse_expr("tr(x1)").is_sigma());
  CHECK_FALSE(parse_expr("x1").is_sigma());
  CHECK_THROWS(parse_expr("tr(x1)").as_word_poly());
}

TEST_CASE("round trip through the formatter") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_expr(rng, 1 + static_cast<int>(rng() % 3));
    CAPTURE(text);
    auto f = parse_ncpoly(text);
    CHECK(parse_ncpoly(format_poly(f)) == f);
    auto s = tr(f);
    CHECK(parse_sigma(format_sigma(s)) == s);
  }
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const std::string& text) -> long {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos_of("x1 +") == 4);
  CHECK(pos_of("x1 * * x2") == 5);
  CHECK(pos_of("(x1") == 3);
  CHECK(pos_of("y1") == 0);
  CHECK(pos_of("x1 x2)") == 5);
  CHECK(pos_of("tr(x1") >= 3);
  CHECK(pos_of("x1^") == 3);
  CHECK(pos_of("x0") == 0);
  CHECK_THROWS_AS(parse_ncpoly("tr(x1)"), ParseError);
}
