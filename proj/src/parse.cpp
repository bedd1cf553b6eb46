#include "a3d/parse.hpp"

#include <cctype>

namespace a3d {

SigmaPoly<RationalField> ParsedExpr::as_sigma() const {
  switch (kind) {
    case Kind::Sigma: return sigma;
    case Kind::Scalar: return SigmaPoly<RationalField>::constant({}, scalar);
    case Kind::Word: break;
  }
  throw PreconditionError("expected a sigma expression, got a word polynomial");
}

NCPoly<RationalField> ParsedExpr::as_word_poly() const {
  switch (kind) {
    case Kind::Word: return nc;
    case Kind::Scalar:
      if (scalar == 0) return NCPoly<RationalField>{};
      throw PreconditionError("a nonzero constant is not an element of the word algebra");
    case Kind::Sigma: break;
  }
  throw PreconditionError("expected a word polynomial, got a sigma expression");
}

namespace {

using Q = RationalField;
using Kind = ParsedExpr::Kind;

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ParsedExpr run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    ParsedExpr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c)) || keyword_at(pos_);
  }
  bool keyword_at(std::size_t p) const {
    for (const char* kw : {"bar", "tr", "s2", "s3", "st"}) {
      std::string k(kw);
      if (s_.compare(p, k.size(), k) == 0) {
        std::size_t q = p + k.size();
        while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
        if (q < s_.size() && s_[q] == '(') return true;
      }
    }
    return false;
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    if (pos_ - start > 17) throw ParseError("integer too large", start);
    return std::stoll(s_.substr(start, pos_ - start));
  }

  static ParsedExpr scalar(mpq_class q) {
    ParsedExpr e;
    e.kind = Kind::Scalar;
    e.scalar = std::move(q);
    return e;
  }
  static ParsedExpr word(NCPoly<Q> f) {
    ParsedExpr e;
    e.kind = Kind::Word;
    e.nc = std::move(f);
    return e;
  }
  static ParsedExpr sigma(SigmaPoly<Q> f) {
    ParsedExpr e;
    e.kind = Kind::Sigma;
    e.sigma = std::move(f);
    return e;
  }

  ParsedExpr combine(ParsedExpr a, ParsedExpr b, bool subtract, std::size_t at) {
    if (subtract) b = negate(std::move(b));
    if (a.kind == Kind::Scalar && b.kind == Kind::Scalar) return scalar(a.scalar + b.scalar);
    if (a.kind == Kind::Word && b.kind == Kind::Word) return word(a.nc + b.nc);
    if (a.kind == Kind::Word || b.kind == Kind::Word) {
      const ParsedExpr& other = a.kind == Kind::Word ? b : a;
      if (other.kind == Kind::Scalar && other.scalar == 0) return a.kind == Kind::Word ? a : b;
      throw ParseError(other.kind == Kind::Scalar ? "constant term added to a word polynomial"
                                                  : "cannot add a word polynomial and a sigma expression",
                       at);
    }
    return sigma(a.as_sigma() + b.as_sigma());
  }

  ParsedExpr multiply(ParsedExpr a, ParsedExpr b, std::size_t at) {
    if (a.kind == Kind::Scalar && b.kind == Kind::Scalar) return scalar(a.scalar * b.scalar);
    if (a.kind == Kind::Scalar) std::swap(a, b);
    if (b.kind == Kind::Scalar) {
      if (a.kind == Kind::Word) return word(a.nc.scaled(b.scalar));
      return sigma(a.sigma.scaled(b.scalar));
    }
    if (a.kind == Kind::Word && b.kind == Kind::Word) return word(a.nc * b.nc);
    if (a.kind == Kind::Sigma && b.kind == Kind::Sigma) return sigma(a.sigma * b.sigma);
    throw ParseError("cannot multiply a word polynomial by a sigma expression", at);
  }

  static ParsedExpr negate(ParsedExpr e) {
    switch (e.kind) {
      case Kind::Scalar: e.scalar = -e.scalar; break;
      case Kind::Word: e.nc = -e.nc; break;
      case Kind::Sigma: e.sigma = e.sigma.scaled(-1); break;
    }
    return e;
  }

  ParsedExpr expr() {
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    ParsedExpr acc = term();
    if (neg) acc = negate(std::move(acc));
    for (;;) {
      if (!(peek('+') || peek('-'))) break;
      std::size_t at = pos_;
      bool sub = s_[pos_++] == '-';
      acc = combine(std::move(acc), term(), sub, at);
    }
    return acc;
  }

  ParsedExpr term() {
    ParsedExpr acc = factor();
    for (;;) {
      std::size_t at = pos_;
      if (peek('*')) {
        ++pos_;
        acc = multiply(std::move(acc), factor(), at);
      } else if (starts_factor()) {
        acc = multiply(std::move(acc), factor(), at);
      } else {
        break;
      }
    }
    return acc;
  }

  ParsedExpr factor() {
    skip();
    std::size_t at = pos_;
    ParsedExpr base = primary();
    if (peek('\'')) {
      if (base.kind != Kind::Word) throw ParseError("transpose applies only to word polynomials", pos_);
      ++pos_;
      base.nc = base.nc.transpose();
    }
    if (peek('^')) {
      ++pos_;
      std::size_t epos = pos_;
      long long k = integer();
      if (k < 1) throw ParseError("exponent must be positive", epos);
      if (k > 64) throw ParseError("exponent too large", epos);
      ParsedExpr r = base;
      for (long long i = 1; i < k; ++i) r = multiply(std::move(r), base, at);
      return r;
    }
    return base;
  }

  ParsedExpr argument_poly(const char* fn) {
    expect('(');
    std::size_t at = pos_;
    ParsedExpr inner = expr();
    expect(')');
    if (inner.kind != Kind::Word) throw ParseError(std::string(fn) + " expects a word polynomial argument", at);
    return inner;
  }

  ParsedExpr primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(static_cast<long>(integer()));
      if (peek('/')) {
        ++pos_;
        std::size_t dpos = pos_;
        long long den = integer();
        if (den == 0) throw ParseError("zero denominator", dpos);
        q /= static_cast<long>(den);
      }
      return scalar(q);
    }
    if (c == '(') {
      ++pos_;
      ParsedExpr e = expr();
      expect(')');
      return e;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("letter without index", at);
      if (pos_ - start > 3) throw ParseError("letter index too large", at);
      int index = std::stoi(s_.substr(start, pos_ - start));
      if (index < 1 || index > 64) throw ParseError("letter index must be in 1..64", at);
      bool transposed = pos_ < s_.size() && s_[pos_] == '\'';
      if (transposed) ++pos_;
      return word(letter_poly(Q{}, index, transposed));
    }
    auto kw = [&](const char* name) {
      std::string k(name);
      if (s_.compare(pos_, k.size(), k) != 0 || !keyword_at(pos_)) return false;
      pos_ += k.size();
      return true;
    };
    if (kw("bar")) return word(argument_poly("bar").nc.bar());
    if (kw("tr")) return sigma(tr(argument_poly("tr").nc));
    for (int t : {2, 3}) {
      if (kw(t == 2 ? "s2" : "s3")) {
        std::size_t apos = pos_;
        ParsedExpr arg = argument_poly(t == 2 ? "s2" : "s3");
        return sigma(sigma_at(t, arg.nc, apos));
      }
    }
    if (kw("st")) {
      expect('(');
      std::size_t tpos = pos_;
      long long t = integer();
      if (t < 1 || t > 1000) throw ParseError("st order must be in 1..1000", tpos);
      expect(',');
      std::size_t apos = pos_;
      ParsedExpr arg = expr();
      expect(')');
      if (arg.kind != Kind::Word) throw ParseError("st expects a word polynomial argument", apos);
      return sigma(sigma_at(static_cast<int>(t), arg.nc, apos));
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  SigmaPoly<Q> sigma_at(int t, const NCPoly<Q>& f, std::size_t at) {
    if (t > 1 && f.size() != 1) throw ParseError("sigma_t with t > 1 needs a monomial argument", at);
    return sigma_of(t, f);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedExpr parse_expr(const std::string& text) { return Parser(text).run(); }

NCPoly<RationalField> parse_ncpoly(const std::string& text) {
  ParsedExpr e = parse_expr(text);
  if (e.kind == Kind::Sigma) throw ParseError("expected a word polynomial", 0);
  return e.as_word_poly();
}

SigmaPoly<RationalField> parse_sigma(const std::string& text) {
  ParsedExpr e = parse_expr(text);
  if (e.kind == Kind::Word) throw ParseError("expected a sigma expression", 0);
  return e.as_sigma();
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::string format_factor(const SigmaFactor& f) {
  const std::string w = f.arg.to_string();
  switch (f.t) {
    case 1: return "tr(" + w + ")";
    case 2: return "s2(" + w + ")";
    case 3: return "s3(" + w + ")";
    default: return "st(" + std::to_string(f.t) + ", " + w + ")";
  }
}

std::string format_monomial(const SigmaMonomial& m) {
  std::string out;
  const auto& fs = m.factors();
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    if (!out.empty()) out += "*";
    out += format_factor(fs[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace a3d
