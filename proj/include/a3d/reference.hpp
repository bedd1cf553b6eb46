#pragma once

#include <vector>

#include "a3d/engine.hpp"

namespace a3d {

/// Serial brute-force reference for one component: every instance u R(args) v
/// of every family with arbitrary monomial arguments and outer words,
/// reduced by dense Gaussian elimination. Exponential; small components only.
template <class K>
class ReferenceComponent {
 public:
  using value_type = typename K::value_type;

  ReferenceComponent(K field, const Multidegree& delta) : field_(std::move(field)), delta_(delta) {
    words_ = enumerate_words(delta_);
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
    pivot_row_.assign(words_.size(), -1);
    if (delta_.total() >= 3) generate();
  }

  std::size_t ambient() const { return words_.size(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t quotient_dim() const { return words_.size() - rows_.size(); }
  std::size_t instances() const { return instances_; }

  bool contains(const NCPoly<K>& f) const {
    std::vector<value_type> v(words_.size(), field_.zero());
    for (const auto& [w, c] : f.terms()) {
      auto it = index_.find(w);
      if (it == index_.end()) throw PreconditionError("word " + w.to_string() + " is outside the component");
      v[it->second] = c;
    }
    return reduce(v);
  }

 private:
  // Reduces v in place; returns true if it vanishes.
  bool reduce(std::vector<value_type>& v) const {
    for (std::size_t col = 0; col < v.size(); ++col) {
      if (field_.is_zero(v[col]) || pivot_row_[col] < 0) continue;
      const auto& r = rows_[static_cast<std::size_t>(pivot_row_[col])];
      value_type c = field_.neg(v[col]);
      for (std::size_t j = col; j < v.size(); ++j)
        if (!field_.is_zero(r[j])) v[j] = field_.add(v[j], field_.mul(c, r[j]));
    }
    for (const auto& x : v)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  void insert(std::vector<value_type> v) {
    ++instances_;
    if (reduce(v)) return;
    std::size_t lead = 0;
    while (field_.is_zero(v[lead])) ++lead;
    value_type inv = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(x, inv);
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
  }

  void generate() {
    const std::size_t d = delta_.size();
    std::vector<Multidegree> parts = sub_multidegrees(delta_);
    std::vector<Multidegree> outer = parts;
    outer.insert(outer.begin(), Multidegree(d));
    std::vector<IntTerm> terms;
    auto add_instance = [&](RelationKind kind, const Word& u, const Word& a, const Word& b, const Word& c, const Word& v) {
      terms.clear();
      expand_relation(kind, a, b, c, terms);
      std::vector<value_type> row(words_.size(), field_.zero());
      for (const auto& t : terms) {
        std::size_t i = index_.at(u * t.word * v);
        row[i] = field_.add(row[i], field_.from_int(t.coeff));
      }
      insert(std::move(row));
    };
    auto words_or_unit = [](const Multidegree& m) {
      return m.is_zero() ? std::vector<Word>{Word{}} : enumerate_words(m);
    };
    for (const auto& mu : outer) {
      for (const auto& mv : outer) {
        const Multidegree muv = mu + mv;
        if (!muv.fits_in(delta_) || muv == delta_) continue;
        const Multidegree core = delta_ - muv;
        const auto us = words_or_unit(mu);
        const auto vs = words_or_unit(mv);
        for (const auto& ma : parts) {
          if (!ma.fits_in(core)) continue;
          const auto as = enumerate_words(ma);
          if (ma * 3 == core)
            for (const auto& u : us)
              for (const auto& v : vs)
                for (const auto& a : as) add_instance(RelationKind::T1, u, a, Word{}, Word{}, v);
          if ((ma * 2).fits_in(core) && !(ma * 2 == core)) {
            const auto bs = enumerate_words(core - ma * 2);
            for (const auto& u : us)
              for (const auto& v : vs)
                for (const auto& a : as)
                  for (const auto& b : bs) add_instance(RelationKind::T2, u, a, b, Word{}, v);
          }
          for (const auto& mb : parts) {
            const Multidegree mab = ma + mb;
            if (!mab.fits_in(core) || mab == core) continue;
            const auto bs = enumerate_words(mb);
            const auto cs = enumerate_words(core - mab);
            for (const auto& u : us)
              for (const auto& v : vs)
                for (const auto& a : as)
                  for (const auto& b : bs)
                    for (const auto& c : cs) {
                      add_instance(RelationKind::T3, u, a, b, c, v);
                      add_instance(RelationKind::T, u, a, b, c, v);
                    }
          }
        }
      }
    }
  }

  K field_;
  Multidegree delta_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<int> pivot_row_;
  std::size_t instances_ = 0;
};

}  // namespace a3d
