#include <doctest.h>

#include <filesystem>
#include <random>

#include "a3d/engine.hpp"
#include "a3d/reference.hpp"
#include "a3d/relations.hpp"

using namespace a3d;

namespace {

template <class K>
NCPoly<K> P(const K& f, const char* s) {
  return NCPoly<K>::monomial(f, parse_word(s));
}

struct FrozenDim {
  std::size_t d;
  Multidegree delta;
  std::size_t ambient;
  std::size_t quotient_f3;
  std::size_t quotient_f5;
};

const std::vector<FrozenDim>& frozen_dims() {
  static const std::vector<FrozenDim> dims = {
      {1, {3}, 8, 4, 4},          {1, {4}, 16, 4, 4},         {1, {5}, 32, 2, 2},
      {1, {6}, 64, 1, 0},         {2, {2, 1}, 24, 16, 16},    {2, {2, 2}, 96, 28, 28},
      {2, {3, 1}, 64, 18, 18},    {3, {1, 1, 1}, 48, 34, 34},
  };
  return dims;
}

}  // namespace

TEST_CASE("relation polynomials") {
  PrimeField F(5);
  auto a = parse_word("x1"), b = parse_word("x2"), c = parse_word("x3");
  CHECK(relation_poly(F, RelationKind::T1, {a}) == P(F, "x1^3"));
  CHECK(relation_poly(F, RelationKind::T2, {a, b}) == P(F, "x1^2 x2") + P(F, "x1 x2 x1") + P(F, "x2 x1^2"));
  CHECK(relation_poly(F, RelationKind::T3, {a, b, c}).size() == 6);
  CHECK(relation_poly(F, RelationKind::T3, {a, a, a}) == P(F, "x1^3").scaled(F.from_int(6)));
  CHECK_THROWS_AS(relation_poly(F, RelationKind::T2, {a}), PreconditionError);
  CHECK_THROWS_AS(relation_poly(F, RelationKind::T1, {Word{}}), PreconditionError);
  CHECK(relation_kind_from_string(to_string(RelationKind::T)) == RelationKind::T);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Word> args(3);
    for (auto& w : args)
      for (int k = 0, n = 1 + static_cast<int>(rng() % 3); k < n; ++k)
        w.push_back(Letter::from_code(static_cast<std::uint8_t>(rng() % 6)));
    CHECK(relation_poly(F, RelationKind::T, args) == relation_T_alternative(F, args[0], args[1], args[2]));
  }
}

TEST_CASE("frozen component dimensions over F_3 and F_5") {
  for (const auto& fd : frozen_dims()) {
    CAPTURE(fd.delta.to_string());
    A3dEngine<PrimeField> e3(PrimeField(3), fd.d), e5(PrimeField(5), fd.d);
    auto r3 = e3.report(fd.delta);
    CHECK(r3.ambient == fd.ambient);
    CHECK(r3.quotient == fd.quotient_f3);
    CHECK(r3.rank + r3.quotient == r3.ambient);
    CHECK(e5.quotient_dimension(fd.delta) == fd.quotient_f5);
  }
}

TEST_CASE("engine agrees with the direct reference on small components") {
  for (const auto& fd : frozen_dims()) {
    if (fd.ambient > 64) continue;
    CAPTURE(fd.delta.to_string());
    A3dEngine<PrimeField> e(PrimeField(3), fd.d);
    ReferenceComponent<PrimeField> ref(PrimeField(3), fd.delta);
    CHECK(ref.ambient() == fd.ambient);
    CHECK(ref.quotient_dim() == e.quotient_dimension(fd.delta));
  }
  A3dEngine<RationalField> q(RationalField{}, 2);
  CHECK(q.quotient_dimension(Multidegree{2, 1}) == 16);
  CHECK(ReferenceComponent<RationalField>(RationalField{}, Multidegree{2, 1}).quotient_dim() == 16);
}

TEST_CASE("ideal component spans") {
  PrimeField F(3);
  A3dEngine<PrimeField> e(F, 1);
  CHECK(e.ideal_component_basis(Multidegree{2}).rank() == 0);
  CHECK(e.quotient_dimension(Multidegree{2}) == 4);
  auto span = e.ideal_component_basis(Multidegree{4});
  CHECK(membership(P(F, "x1^4"), span).member);
  CHECK_FALSE(membership(P(F, "x1^2 x1'^2"), span).member);
  CHECK(e.words_of(Multidegree{4}).size() == 16);
}

TEST_CASE("zero tests") {
  PrimeField F(3);
  A3dEngine<PrimeField> e(F, 2);
  auto x1 = letter_poly(F, 1), x2 = letter_poly(F, 2);
  CHECK(e.is_zero(x1.pow(3)));
  CHECK(e.is_zero(x1 * x2 * x1 + x1.pow(2) * x2 + x2 * x1.pow(2)));
  CHECK_FALSE(e.is_zero(x1 * x2));
  CHECK_FALSE(e.is_zero(x1.pow(2) * x2));
  CHECK(e.is_zero(x1.bar() * x2.bar() * x1.bar() + x1.bar() * x1.bar() * x2.bar() + x2.bar() * x1.bar() * x1.bar()));
  auto u = x1 * x2.bar() * x1;
  CHECK(e.normal_form(e.normal_form(u)) == e.normal_form(u));
  CHECK(e.is_zero(u - e.normal_form(u)));
  CHECK_THROWS_AS(e.is_zero(letter_poly(F, 3)), PreconditionError);
  CHECK_THROWS_AS(e.is_zero(letter_poly(PrimeField(5), 1)), FieldMismatchError);
}

TEST_CASE("nilpotency degree over F_3") {
  A3dEngine<PrimeField> e(PrimeField(3), 1);
  auto r = e.nilpotency_degree(10);
  CHECK(r.degree == 7);
  CHECK(r.graded_dims == std::vector<std::size_t>{2, 4, 4, 4, 2, 1, 0, 0, 0, 0});
  A3dEngine<PrimeField> capped(PrimeField(3), 1);
  CHECK_THROWS_AS(capped.nilpotency_degree(3), CapExceededError);
}

TEST_CASE("pi substitution") {
  PrimeField F(3);
  CHECK(pi_substitute(P(F, "x1 x2 x1'"), 1) == P(F, "x2"));
  CHECK(pi_substitute(P(F, "x2 x3 x2'"), 2) == P(F, "x3"));
  CHECK(pi_substitute(P(F, "x2 x3"), 1) == P(F, "x2 x3"));
  CHECK_THROWS_AS(pi_substitute(P(F, "x1^3 x2"), 1), PreconditionError);
  CHECK_THROWS_AS(pi_substitute(P(F, "x1^2"), 1), PreconditionError);
  CHECK_THROWS_AS(pi_substitute(P(PrimeField(5), "x1 x2"), 1), PreconditionError);
  CHECK_THROWS_AS(pi_substitute(P(F, "x1 x2"), 0), PreconditionError);
}

TEST_CASE("witness polynomial") {
  PrimeField F(3);
  auto a2 = witness_ad(F, 2);
  CHECK(a2.size() == 8);
  CHECK(a2.components(2).size() == 1);
  CHECK(a2.components(2).begin()->first == Multidegree{6, 2});
  CHECK(witness_ad(F, 1).components(1).begin()->first == Multidegree{6});
  CHECK_THROWS_AS(witness_ad(F, 0), PreconditionError);
}

TEST_CASE("rewrite_fast") {
  PrimeField F(3);
  CHECK(rewrite_fast(P(F, "x1 x2 x1")) == -(P(F, "x1^2 x2") + P(F, "x2 x1^2")));
  CHECK(rewrite_fast(P(F, "x1 x2 x1^2")) == -P(F, "x1^2 x2 x1"));
  CHECK(rewrite_fast(P(F, "x1^3 x2")).is_zero());
  CHECK(rewrite_fast(P(F, "x1 x2")) == P(F, "x1 x2"));
}

TEST_CASE("component cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / ("a3d-cache-test-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  PrimeField F(5);
  const Multidegree delta{2, 2};
  EngineOptions opts;
  opts.cache_dir = dir;
  A3dEngine<PrimeField> first(F, 2, opts);
  const auto& c1 = first.component(delta);
  bool wrote = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) wrote |= entry.is_regular_file();
  CHECK(wrote);
  A3dEngine<PrimeField> second(F, 2, opts);
  const auto& c2 = second.component(delta);
  CHECK(c2.quotient_dim == c1.quotient_dim);
  CHECK(c2.normal == c1.normal);
  CHECK(c2.nf == c1.nf);
  std::filesystem::remove_all(dir);
}
