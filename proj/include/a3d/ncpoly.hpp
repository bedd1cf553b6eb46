#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "a3d/field.hpp"
#include "a3d/word.hpp"

namespace a3d {

/// A finite linear combination of words over an exact field K. Only nonzero
/// coefficients are stored; terms are kept in word order.
template <class K>
class NCPoly {
 public:
  using field_type = K;
  using value_type = typename K::value_type;
  using term_map = std::map<Word, value_type>;

  explicit NCPoly(K field = K{}) : field_(std::move(field)) {}

  /// c * w. The empty word (unity of M_1) requires `allow_unit`.
  static NCPoly monomial(K field, const Word& w, value_type c, bool allow_unit = false) {
    if (!allow_unit) require_nonempty(w, "NCPoly::monomial");
    NCPoly p(std::move(field));
    p.add_term(w, c);
    return p;
  }
  static NCPoly monomial(K field, const Word& w) {
    auto one = field.one();
    return monomial(std::move(field), w, one);
  }

  const K& field() const { return field_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  value_type coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Word& w, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    check_field(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    check_field(o);
    for (const auto& [w, c] : o.terms_) add_term(w, field_.neg(c));
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const { return scaled(field_.neg(field_.one())); }

  NCPoly scaled(const value_type& c) const {
    NCPoly r(field_);
    if (field_.is_zero(c)) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, field_.mul(v, c));
    return r;
  }

  /// Bilinear concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.check_field(b);
    NCPoly r(a.field_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add_term(u * v, a.field_.mul(cu, cv));
    return r;
  }

  NCPoly pow(int k) const {
    if (k < 1) throw PreconditionError("NCPoly::pow requires k >= 1");
    NCPoly r = *this;
    for (int i = 1; i < k; ++i) r = r * *this;
    return r;
  }

  /// Linear extension of the involution.
  NCPoly transpose() const {
    NCPoly r(field_);
    for (const auto& [w, c] : terms_) r.add_term(involute(w), c);
    return r;
  }

  /// f - f^T.
  NCPoly bar() const { return *this - transpose(); }

  int max_index() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.max_index());
    return m;
  }

  /// Splits into multihomogeneous components in an ambient with d indices.
  std::map<Multidegree, NCPoly> components(std::size_t d) const {
    std::map<Multidegree, NCPoly> out;
    for (const auto& [w, c] : terms_) {
      auto [it, inserted] = out.try_emplace(multidegree(w, d), field_);
      it->second.terms_.emplace(w, c);
    }
    return out;
  }

  bool is_homogeneous() const { return components(static_cast<std::size_t>(max_index())).size() <= 1; }

  bool operator==(const NCPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  void check_field(const NCPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatchError();
  }

 private:
  K field_;
  term_map terms_;
};

/// Applies x_i -> image[i], x_i^T -> involute(image[i]).
template <class K>
NCPoly<K> substitute(const NCPoly<K>& f, const std::map<int, Word>& images) {
  NCPoly<K> r(f.field());
  for (const auto& [w, c] : f.terms()) {
    Word img;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = images.find(w[i].index());
      if (it == images.end())
        throw PreconditionError("substitute: index " + std::to_string(w[i].index()) + " is not mapped");
      img *= w[i].transposed() ? involute(it->second) : it->second;
    }
    r.add_term(img, c);
  }
  return r;
}

/// Maps rational coefficients into K (reducing modulo the characteristic).
template <class K>
NCPoly<K> to_field(const NCPoly<RationalField>& f, const K& field) {
  NCPoly<K> r(field);
  for (const auto& [w, c] : f.terms()) r.add_term(w, field.from_rational(c));
  return r;
}

template <class K>
NCPoly<RationalField> to_rational(const NCPoly<K>& f) {
  NCPoly<RationalField> r;
  for (const auto& [w, c] : f.terms()) r.add_term(w, f.field().to_rational(c));
  return r;
}

template <class K>
NCPoly<K> word_poly(const K& field, const Word& w) {
  return NCPoly<K>::monomial(field, w);
}

template <class K>
NCPoly<K> letter_poly(const K& field, int index, bool transposed = false) {
  return NCPoly<K>::monomial(field, Word::letter(index, transposed));
}

}  // namespace a3d
