#include <doctest.h>

#include <set>

#include "a3d/word.hpp"

using namespace a3d;

namespace {

Word w(const char* s) { return parse_word(s); }

}  // namespace

TEST_CASE("letter order and codes") {
  CHECK(Letter(1, false) < Letter(1, true));
  CHECK(Letter(1, true) < Letter(2, false));
  CHECK(Letter(3, true).index() == 3);
  CHECK(Letter(3, true).transposed());
  CHECK(Letter(2, false).transpose() == Letter(2, true));
}

TEST_CASE("involute") {
  CHECK(involute(w("x1 x2")) == w("x2' x1'"));
  CHECK(involute(w("x1'")) == w("x1"));
  CHECK(involute(w("x1 x1")) == w("x1' x1'"));
  CHECK(involute(involute(w("x1 x2' x3 x3"))) == w("x1 x2' x3 x3"));
}

TEST_CASE("multidegree") {
  CHECK(multidegree(w("x1 x2' x1"), 2) == Multidegree{2, 1});
  CHECK(multidegree(w("x1'"), 1) == Multidegree{1});
  CHECK(multidegree(w("x3 x3 x3'"), 3) == Multidegree{0, 0, 3});
  CHECK(multidegree(w("x2"), 3) == Multidegree{0, 1, 0});
  CHECK_THROWS_AS(multidegree(w("x3"), 2), PreconditionError);
  CHECK(Multidegree{3, 1}.to_string() == "3,1");
  CHECK((Multidegree{3, 1} - Multidegree{1, 1}) == Multidegree{2, 0});
  CHECK(Multidegree{1, 2}.fits_in(Multidegree{2, 2}));
  CHECK_FALSE(Multidegree{3, 2}.fits_in(Multidegree{2, 2}));
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(w("x1 x2")));
  CHECK_FALSE(is_primitive(w("x1 x2 x1 x2")));
  CHECK(is_primitive(w("x1 x1'")));
  CHECK_FALSE(is_primitive(w("x1 x1")));
  CHECK(is_primitive(w("x1")));
}

TEST_CASE("class_rep") {
  CHECK(class_rep(w("x2 x1")) == w("x1 x2"));
  CHECK(class_rep(w("x1'")) == w("x1"));
  // Brute-force minimum over rotations of w and of its involution.
  for (const char* s : {"x1 x2'", "x2' x1 x1'", "x2 x1' x1 x2'", "x1' x1' x2 x1"}) {
    Word v = w(s);
    Word best = v;
    for (const Word& u : {v, involute(v)})
      for (std::size_t k = 0; k < u.size(); ++k) best = std::min(best, u.rotated(k));
    CHECK(class_rep(v) == best);
    CHECK(is_class_rep(best));
  }
  CHECK(class_rep(w("x1 x2'")) == w("x1 x2'"));
  CHECK(class_size(w("x1 x2")) == 4);
  CHECK(class_size(w("x1 x1")) == 2);
}

TEST_CASE("enumerate_words examples") {
  CHECK(enumerate_words(Multidegree{1}) == std::vector<Word>{w("x1"), w("x1'")});
  EnumerateOptions classes;
  classes.classes_only = true;
  // x1 x1' ~ x1' x1 by rotation, so degree 2 has two classes: {x1x1, x1'x1'} and {x1x1', x1'x1}.
  auto deg2 = enumerate_words(Multidegree{2}, classes);
  CHECK(deg2 == std::vector<Word>{w("x1 x1"), w("x1 x1'")});
  CHECK(enumerate_words(Multidegree{1, 1}).size() == 8);
  CHECK(word_count(Multidegree{1, 1}) == 8);
  CHECK(enumerate_words(Multidegree{1, 1}, classes).size() == 2);
}

TEST_CASE("enumeration is lexicographic, complete and duplicate free") {
  for (const Multidegree& m : {Multidegree{3}, Multidegree{2, 1}, Multidegree{1, 1, 1}, Multidegree{2, 2}}) {
    auto all = enumerate_words(m);
    CHECK(all.size() == word_count(m));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Word>(all.begin(), all.end()).size() == all.size());
    for (const Word& v : all) CHECK(multidegree(v, m.size()) == m);
  }
}

TEST_CASE("enumeration options") {
  EnumerateOptions cap;
  cap.per_literal_cap = 1;
  for (const Word& v : enumerate_words(Multidegree{2}, cap)) {
    CHECK(v.degree_of(Letter(1, false)) <= 1);
    CHECK(v.degree_of(Letter(1, true)) <= 1);
  }
  EnumerateOptions prim;
  prim.primitive_only = true;
  prim.classes_only = true;
  for (const Word& v : enumerate_words(Multidegree{4}, prim)) CHECK(is_primitive(v));
  EnumerateOptions follow;
  follow.follows = [](Letter a, Letter b) { return a.transposed() == b.transposed(); };
  follow.cyclic_follow = true;
  CHECK(enumerate_words(Multidegree{3}, follow) == std::vector<Word>{w("x1^3"), w("x1'^3")});
}

TEST_CASE("sub_multidegrees and compositions") {
  CHECK(sub_multidegrees(Multidegree{1, 1}).size() == 3);
  CHECK(compositions(2, 2) == std::vector<Multidegree>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("word grammar") {
  CHECK(parse_word("x1^2 * x2'") == Word{Letter(1, false), Letter(1, false), Letter(2, true)});
  CHECK(parse_word("x1^2 * x2'").to_string() == "x1^2*x2'");
  CHECK_THROWS(parse_word("x0"));
  CHECK_THROWS(parse_word("y1"));
  CHECK(parse_word("").empty());
}

TEST_CASE("empty word only in unit mode") {
  CHECK_THROWS_AS(require_nonempty(Word{}, "test"), PreconditionError);
}
