#pragma once

#include <string>
#include <vector>

#include "a3d/ncpoly.hpp"

namespace a3d {

/// The four relation families presenting A_{3,d}.
enum class RelationKind { T1, T2, T3, T };

int arity(RelationKind kind);
std::string to_string(RelationKind kind);
RelationKind relation_kind_from_string(const std::string& s);

struct IntTerm {
  Word word;
  int coeff;
};

/// Word expansion with small integer coefficients (duplicates not merged):
///   T1(a) = a^3
///   T2(a,b) = a^2 b + a b a + b a^2
///   T3(a,b,c) = sum over the six orderings
///   T(a,b,c) = a bar(b) bar(c) + bar(b) a^T bar(c) + bar(b) bar(c) a
/// Arguments are monomials (multilinearity in each slot makes these enough).
void expand_relation(RelationKind kind, const Word& a, const Word& b, const Word& c, std::vector<IntTerm>& out);

/// A relation instance u * R(args) * v with u, v in M_1.
struct RelationInstance {
  RelationKind kind = RelationKind::T1;
  std::vector<Word> args;
  Word left;
  Word right;
};

template <class K>
NCPoly<K> relation_poly(const K& field, RelationKind kind, const std::vector<Word>& args) {
  if (static_cast<int>(args.size()) != arity(kind))
    throw PreconditionError(to_string(kind) + " expects " + std::to_string(arity(kind)) + " arguments, got " +
                            std::to_string(args.size()));
  for (const Word& w : args) require_nonempty(w, "relation argument");
  std::vector<IntTerm> terms;
  const Word none;
  expand_relation(kind, args[0], args.size() > 1 ? args[1] : none, args.size() > 2 ? args[2] : none, terms);
  NCPoly<K> f(field);
  for (const auto& t : terms) f.add_term(t.word, field.from_int(t.coeff));
  return f;
}

template <class K>
NCPoly<K> instance_poly(const K& field, const RelationInstance& inst) {
  NCPoly<K> core = relation_poly(field, inst.kind, inst.args);
  NCPoly<K> f(field);
  for (const auto& [w, c] : core.terms()) f.add_term(inst.left * w * inst.right, c);
  return f;
}

/// The second displayed form a bar(b) bar(c) + bar(b) a bar(c) + bar(b) bar(c) a - bar(b) bar(a) bar(c).
template <class K>
NCPoly<K> relation_T_alternative(const K& field, const Word& a, const Word& b, const Word& c) {
  auto A = word_poly(field, a), B = word_poly(field, b).bar(), C = word_poly(field, c).bar();
  return A * B * C + B * A * C + B * C * A - B * A.bar() * C;
}

}  // namespace a3d
