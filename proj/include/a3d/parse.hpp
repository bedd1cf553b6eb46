#pragma once

#include <sstream>
#include <string>

#include "a3d/sigma.hpp"

namespace a3d {

/// Result of parsing an expression: a word polynomial, a sigma expression,
/// or a bare scalar.
struct ParsedExpr {
  enum class Kind { Scalar, Word, Sigma };
  Kind kind = Kind::Scalar;
  mpq_class scalar = 0;
  NCPoly<RationalField> nc;
  SigmaPoly<RationalField> sigma;

  bool is_sigma() const { return kind != Kind::Word; }
  /// The sigma expression (a scalar becomes a constant).
  SigmaPoly<RationalField> as_sigma() const;
  /// The word polynomial; throws for sigma expressions and nonzero scalars.
  NCPoly<RationalField> as_word_poly() const;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := primary ["'"] ['^' int]
///   primary:= int ['/' int] | xN | '(' expr ')' | bar(expr) | tr(expr)
///           | s2(expr) | s3(expr) | st(int, expr)
ParsedExpr parse_expr(const std::string& text);

NCPoly<RationalField> parse_ncpoly(const std::string& text);
SigmaPoly<RationalField> parse_sigma(const std::string& text);

std::string format_rational(const mpq_class& q);

template <class K>
std::string format_poly(const NCPoly<K>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    mpq_class q = f.field().to_rational(c);
    if (q < 0) {
      out << (first ? "-" : " - ");
      q = -q;
    } else if (!first) {
      out << " + ";
    }
    if (q != 1) out << format_rational(q) << "*";
    out << w.to_string();
    first = false;
  }
  return out.str();
}

std::string format_factor(const SigmaFactor& f);
std::string format_monomial(const SigmaMonomial& m);

template <class K>
std::string format_sigma(const SigmaPoly<K>& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    mpq_class q = s.field().to_rational(c);
    if (q < 0) {
      out << (first ? "-" : " - ");
      q = -q;
    } else if (!first) {
      out << " + ";
    }
    if (m.is_one()) {
      out << format_rational(q);
    } else {
      if (q != 1) out << format_rational(q) << "*";
      out << format_monomial(m);
    }
    first = false;
  }
  return out.str();
}

}  // namespace a3d
