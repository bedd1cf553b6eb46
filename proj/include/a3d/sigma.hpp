#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "a3d/ncpoly.hpp"

namespace a3d {

/// sigma_t(w) with w stored as its ~-class representative.
struct SigmaFactor {
  int t = 1;
  Word arg;

  auto operator<=>(const SigmaFactor&) const = default;
};

SigmaFactor sigma_factor(int t, const Word& w);

/// Product of sigma symbols, kept sorted; the empty product is 1.
class SigmaMonomial {
 public:
  SigmaMonomial() = default;
  explicit SigmaMonomial(std::vector<SigmaFactor> factors);

  const std::vector<SigmaFactor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  SigmaMonomial operator*(const SigmaMonomial& o) const;
  /// Sum of t * mdeg(arg) over the factors.
  Multidegree multidegree(std::size_t d) const;
  int degree() const;
  int max_index() const;

  auto operator<=>(const SigmaMonomial&) const = default;

 private:
  std::vector<SigmaFactor> factors_;
};

template <class K>
class SigmaPoly {
 public:
  using value_type = typename K::value_type;
  using term_map = std::map<SigmaMonomial, value_type>;

  explicit SigmaPoly(K field = K{}) : field_(std::move(field)) {}

  static SigmaPoly constant(K field, const value_type& c) {
    SigmaPoly p(std::move(field));
    p.add_term(SigmaMonomial{}, c);
    return p;
  }
  static SigmaPoly symbol(K field, int t, const Word& w) {
    SigmaPoly p(field);
    p.add_term(SigmaMonomial({sigma_factor(t, w)}), field.one());
    return p;
  }

  const K& field() const { return field_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const SigmaMonomial& m, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  SigmaPoly& operator+=(const SigmaPoly& o) {
    check_field(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SigmaPoly& operator-=(const SigmaPoly& o) {
    check_field(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
  friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }

  SigmaPoly scaled(const value_type& c) const {
    SigmaPoly r(field_);
    for (const auto& [m, v] : terms_) r.add_term(m, field_.mul(v, c));
    return r;
  }

  friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    a.check_field(b);
    SigmaPoly r(a.field_);
    for (const auto& [m, c] : a.terms_)
      for (const auto& [n, e] : b.terms_) r.add_term(m * n, a.field_.mul(c, e));
    return r;
  }

  int max_index() const {
    int k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.max_index());
    return k;
  }

  /// Multidegrees of the terms (a single entry iff multihomogeneous).
  std::map<Multidegree, SigmaPoly> components(std::size_t d) const {
    std::map<Multidegree, SigmaPoly> out;
    for (const auto& [m, c] : terms_) out.try_emplace(m.multidegree(d), field_).first->second.add_term(m, c);
    return out;
  }

  bool operator==(const SigmaPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  void check_field(const SigmaPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatchError();
  }

 private:
  K field_;
  term_map terms_;
};

/// tr extended linearly: sum of c * sigma_1(class_rep(w)).
template <class K>
SigmaPoly<K> tr(const NCPoly<K>& f) {
  SigmaPoly<K> out(f.field());
  for (const auto& [w, c] : f.terms()) out.add_term(SigmaMonomial({sigma_factor(1, w)}), c);
  return out;
}

template <class K>
SigmaPoly<K> tr(const K& field, const Word& w) {
  return SigmaPoly<K>::symbol(field, 1, w);
}

/// sigma_t of a scalar multiple of a word; sums are outside the formal scope.
template <class K>
SigmaPoly<K> sigma_of(int t, const NCPoly<K>& f) {
  if (t < 1) throw PreconditionError("sigma_t requires t >= 1");
  if (t == 1) return tr(f);
  if (f.size() != 1)
    throw PreconditionError("sigma_" + std::to_string(t) +
                            " of a non-monomial argument is not expanded formally; evaluate it numerically instead");
  const auto& [w, c] = *f.terms().begin();
  SigmaPoly<K> out(f.field());
  out.add_term(SigmaMonomial({sigma_factor(t, w)}), f.field().pow(c, static_cast<std::uint64_t>(t)));
  return out;
}

/// One summand of sigma_{t,r}(x1, x2, x3).
struct SigmaTRDatum {
  Word word;
  int j = 1;
  int xi = 0;
};

/// The follow constraint of sigma_{t,r}: x1, x3, x3^T are followed by
/// x1, x2, x2^T; x1^T, x2, x2^T are followed by x1^T, x3, x3^T.
bool sigma_tr_follows(Letter a, Letter b);

/// The words of I_{t,r} (class representatives, lexicographic within each j).
std::vector<SigmaTRDatum> sigma_tr_data(int t, int r);

template <class K>
SigmaPoly<K> build_sigma_tr(const K& field, int t, int r) {
  if (t < 0 || r < 0) throw PreconditionError("sigma_{t,r} requires t, r >= 0");
  if (t == 0 && r == 0) return SigmaPoly<K>::constant(field, field.one());
  SigmaPoly<K> out(field);
  for (const auto& a : sigma_tr_data(t, r)) {
    auto c = a.xi % 2 == 0 ? field.one() : field.neg(field.one());
    out.add_term(SigmaMonomial({sigma_factor(a.j, a.word)}), c);
  }
  return out;
}

/// Replaces x_i by images[i] (and x_i^T by its involution) inside every
/// symbol; indices without an image are kept.
template <class K>
SigmaPoly<K> substitute_args(const SigmaPoly<K>& f, const std::map<int, Word>& images) {
  for (const auto& [i, w] : images) require_nonempty(w, "substitute_args image");
  SigmaPoly<K> out(f.field());
  for (const auto& [m, c] : f.terms()) {
    std::vector<SigmaFactor> fs;
    for (const auto& fac : m.factors()) {
      Word img;
      for (std::size_t p = 0; p < fac.arg.size(); ++p) {
        Letter l = fac.arg[p];
        auto it = images.find(l.index());
        if (it == images.end())
          img.push_back(l);
        else
          img *= l.transposed() ? involute(it->second) : it->second;
      }
      fs.push_back(sigma_factor(fac.t, img));
    }
    out.add_term(SigmaMonomial(std::move(fs)), c);
  }
  return out;
}

/// Substitution x1 -> a1, x2 -> a2, x3 -> a3 with scalar-monomial arguments.
template <class K>
SigmaPoly<K> substitute_args(const SigmaPoly<K>& f, const std::vector<NCPoly<K>>& args) {
  std::map<int, Word> images;
  std::vector<typename K::value_type> scale;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].size() != 1)
      throw PreconditionError("substitute_args: argument " + std::to_string(i + 1) +
                              " is not a monomial; use evaluation-level substitution for sums");
    images[static_cast<int>(i + 1)] = args[i].terms().begin()->first;
    scale.push_back(args[i].terms().begin()->second);
  }
  SigmaPoly<K> base = substitute_args(f, images);
  bool trivial = true;
  for (const auto& s : scale) trivial = trivial && f.field().is_one(s);
  if (trivial) return base;
  // A scalar on x_i contributes its power deg_{x_i} of the original symbol.
  SigmaPoly<K> out(f.field());
  for (const auto& [m, c] : f.terms()) {
    auto coeff = c;
    for (const auto& fac : m.factors())
      for (std::size_t p = 0; p < fac.arg.size(); ++p) {
        int i = fac.arg[p].index();
        if (i >= 1 && static_cast<std::size_t>(i) <= scale.size())
          coeff = f.field().mul(coeff, f.field().pow(scale[static_cast<std::size_t>(i - 1)], static_cast<std::uint64_t>(fac.t)));
      }
    SigmaPoly<K> single(f.field());
    single.add_term(m, coeff);
    out += substitute_args(single, images);
  }
  return out;
}

}  // namespace a3d
