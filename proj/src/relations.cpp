#include "a3d/relations.hpp"

namespace a3d {

int arity(RelationKind kind) {
  switch (kind) {
    case RelationKind::T1: return 1;
    case RelationKind::T2: return 2;
    case RelationKind::T3:
    case RelationKind::T: return 3;
  }
  return 0;
}

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::T1: return "T1";
    case RelationKind::T2: return "T2";
    case RelationKind::T3: return "T3";
    case RelationKind::T: return "T";
  }
  return "?";
}

RelationKind relation_kind_from_string(const std::string& s) {
  if (s == "T1") return RelationKind::T1;
  if (s == "T2") return RelationKind::T2;
  if (s == "T3") return RelationKind::T3;
  if (s == "T") return RelationKind::T;
  throw PreconditionError("unknown relation kind '" + s + "'");
}

void expand_relation(RelationKind kind, const Word& a, const Word& b, const Word& c, std::vector<IntTerm>& out) {
  switch (kind) {
    case RelationKind::T1:
      out.push_back({a * a * a, 1});
      return;
    case RelationKind::T2:
      out.push_back({a * a * b, 1});
      out.push_back({a * b * a, 1});
      out.push_back({b * a * a, 1});
      return;
    case RelationKind::T3:
      out.push_back({a * b * c, 1});
      out.push_back({a * c * b, 1});
      out.push_back({b * a * c, 1});
      out.push_back({b * c * a, 1});
      out.push_back({c * a * b, 1});
      out.push_back({c * b * a, 1});
      return;
    case RelationKind::T: {
      const Word bt = involute(b), ct = involute(c), at = involute(a);
      const Word bars_b[2] = {b, bt};
      const Word bars_c[2] = {c, ct};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          int sign = (i + j) % 2 == 0 ? 1 : -1;
          const Word& B = bars_b[i];
          const Word& C = bars_c[j];
          out.push_back({a * B * C, sign});
          out.push_back({B * at * C, sign});
          out.push_back({B * C * a, sign});
        }
      }
      return;
    }
  }
}

}  // namespace a3d
