#include <doctest.h>

#include <random>

#include "a3d/sparse.hpp"

using namespace a3d;

namespace {

template <class K>
NCPoly<K> P(const K& f, const char* s) {
  return NCPoly<K>::monomial(f, parse_word(s));
}

/// Independent dense elimination over F_p.
std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  PrimeField f(p);
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    auto inv = f.inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      auto k = f.mul(m[r][c], inv);
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("coefficient fields") {
  CHECK_THROWS_AS(PrimeField(2), CharacteristicTwoError);
  CHECK_THROWS_AS(PrimeField(9), PreconditionError);
  CHECK_THROWS_AS(parse_characteristic(2), CharacteristicTwoError);
  CHECK(parse_characteristic(0).is_rational());
  PrimeField f(7);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_rational(mpq_class(1, 2)) == 4);
  CHECK_THROWS_AS(PrimeField(3).from_rational(mpq_class(1, 3)), PreconditionError);
  RationalField q;
  CHECK(q.inv(mpq_class(2, 3)) == mpq_class(3, 2));
}

TEST_CASE("ncpoly algebra") {
  RationalField Q;
  auto x1 = P(Q, "x1"), x2t = P(Q, "x2'");
  CHECK(x1.bar() == P(Q, "x1") - P(Q, "x1'"));
  CHECK(x1.bar().bar() == (P(Q, "x1") - P(Q, "x1'")).scaled(2));
  CHECK(x1 * x2t == P(Q, "x1 x2'"));
  auto f = P(Q, "x1 x2") + P(Q, "x2'").scaled(3);
  CHECK(f.bar().bar() == f.bar().scaled(2));
  CHECK(f.transpose().bar() == -f.bar());
  CHECK_THROWS_AS(P(PrimeField(3), "x1") + P(PrimeField(5), "x1"), FieldMismatchError);
  CHECK((x1 - x1).is_zero());
  CHECK(x1.bar().pow(3).size() == 8);
}

TEST_CASE("substitute") {
  RationalField Q;
  CHECK(substitute(P(Q, "x1 x1'"), {{1, parse_word("x2 x3")}}) == P(Q, "x2 x3 x3' x2'"));
  CHECK(substitute(P(Q, "x1").bar(), {{1, parse_word("x2")}}) == P(Q, "x2") - P(Q, "x2'"));
  CHECK_THROWS_AS(substitute(P(Q, "x1 x2"), {{1, parse_word("x2")}}), PreconditionError);
  std::mt19937_64 rng(5);
  const std::map<int, Word> img = {{1, parse_word("x2 x1'")}, {2, parse_word("x3")}};
  for (int i = 0; i < 50; ++i) {
    NCPoly<RationalField> f(Q), g(Q);
    for (int k = 0; k < 3; ++k) {
      Word a, b;
      for (int j = 0; j < 3; ++j) a.push_back(Letter::from_code(static_cast<std::uint8_t>(rng() % 4)));
      for (int j = 0; j < 2; ++j) b.push_back(Letter::from_code(static_cast<std::uint8_t>(rng() % 4)));
      f.add_term(a, Q.from_int(static_cast<long long>(rng() % 7) - 3));
      g.add_term(b, Q.from_int(static_cast<long long>(rng() % 5) + 1));
    }
    CHECK(substitute(f * g, img) == substitute(f, img) * substitute(g, img));
  }
}

TEST_CASE("row_reduce examples") {
  RationalField Q;
  std::vector<Word> basis = {parse_word("x1"), parse_word("x2")};
  CHECK(row_reduce<RationalField>({P(Q, "x1") + P(Q, "x2"), P(Q, "x2")}, basis, Q).rank() == 2);
  CHECK(row_reduce<RationalField>({P(Q, "x1") + P(Q, "x2"), P(Q, "x1") + P(Q, "x2")}, basis, Q).rank() == 1);
  CHECK_THROWS_AS(row_reduce<RationalField>({P(Q, "x3")}, basis, Q), PreconditionError);
}

TEST_CASE("sparse rank matches dense elimination on 200 x 500 over F_3") {
  PrimeField F(3);
  std::mt19937_64 rng(11);
  std::vector<Word> basis;
  for (const Word& v : enumerate_words(Multidegree{3, 2}))
    if (basis.size() < 500) basis.push_back(v);
  REQUIRE(basis.size() >= 240);
  const std::size_t cols = basis.size();
  // Rows built from 150 generators so the rank is deficient.
  std::vector<std::vector<std::uint32_t>> gens(150, std::vector<std::uint32_t>(cols, 0));
  for (auto& g : gens)
    for (int k = 0; k < 6; ++k) g[rng() % cols] = static_cast<std::uint32_t>(rng() % 3);
  std::vector<std::vector<std::uint32_t>> dense;
  std::vector<NCPoly<PrimeField>> rows;
  for (int r = 0; r < 200; ++r) {
    std::vector<std::uint32_t> v(cols, 0);
    for (int k = 0; k < 3; ++k) {
      const auto& g = gens[rng() % gens.size()];
      auto c = static_cast<std::uint32_t>(rng() % 3);
      for (std::size_t j = 0; j < cols; ++j) v[j] = F.add(v[j], F.mul(c, g[j]));
    }
    NCPoly<PrimeField> f(F);
    for (std::size_t j = 0; j < cols; ++j) f.add_term(basis[j], v[j]);
    dense.push_back(v);
    rows.push_back(f);
  }
  auto span = row_reduce(rows, basis, F);
  CHECK(span.rank() == dense_rank(dense, 3));
  CHECK(span.rank() > 0);
}

TEST_CASE("membership and certificates") {
  RationalField Q;
  std::vector<Word> basis = {parse_word("x1"), parse_word("x2")};
  auto only_x2 = row_reduce<RationalField>({P(Q, "x2")}, basis, Q);
  CHECK_FALSE(membership(P(Q, "x1"), only_x2).member);
  auto self = row_reduce<RationalField>({P(Q, "x1") + P(Q, "x2")}, basis, Q);
  CHECK(membership(P(Q, "x1") + P(Q, "x2"), self).member);
  CHECK_THROWS_AS(membership(P(Q, "x1"), self, true), PreconditionError);

  PrimeField F(7);
  std::mt19937_64 rng(3);
  const std::vector<Word> b = enumerate_words(Multidegree{2, 1});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NCPoly<PrimeField>> rows;
    for (int r = 0; r < 6; ++r) {
      NCPoly<PrimeField> f(F);
      for (int k = 0; k < 4; ++k) f.add_term(b[rng() % b.size()], F.random(rng));
      rows.push_back(f);
    }
    NCPoly<PrimeField> target(F);
    for (const auto& r : rows) target += r.scaled(F.random(rng));
    auto span = row_reduce(rows, b, F, true);
    auto m = membership(target, span, true);
    REQUIRE(m.member);
    REQUIRE(m.certificate.has_value());
    NCPoly<PrimeField> back(F);
    for (std::size_t i = 0; i < rows.size(); ++i) back += rows[i].scaled((*m.certificate)[i]);
    CHECK(back == target);
  }
}
