#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "a3d/ncpoly.hpp"

namespace a3d {

template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, typename K::value_type>>;

/// out = a + c * b for column-sorted sparse vectors.
template <class K>
void axpy_merge(const K& field, const SparseVec<K>& a, const typename K::value_type& c, const SparseVec<K>& b,
                SparseVec<K>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto v = field.mul(c, b[j].second);
      if (!field.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      auto v = field.add(a[i].second, field.mul(c, b[j].second));
      if (!field.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
}

/// Dense scratch accumulator for building sparse rows from many sparse pieces.
template <class K>
class Accumulator {
 public:
  using value_type = typename K::value_type;

  Accumulator(K field, std::size_t ncols) : field_(std::move(field)), dense_(ncols, field_.zero()), used_(ncols, 0) {}

  void add(std::uint32_t col, const value_type& c) {
    if (!used_[col]) {
      used_[col] = 1;
      touched_.push_back(col);
      dense_[col] = c;
    } else {
      dense_[col] = field_.add(dense_[col], c);
    }
  }
  void add_scaled(const SparseVec<K>& v, const value_type& c) {
    for (const auto& [col, x] : v) add(col, field_.mul(c, x));
  }

  /// Emits the accumulated vector (sorted, zero-free) and resets.
  SparseVec<K> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec<K> out;
    out.reserve(touched_.size());
    for (std::uint32_t col : touched_) {
      if (!field_.is_zero(dense_[col])) out.emplace_back(col, dense_[col]);
      dense_[col] = field_.zero();
      used_[col] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  K field_;
  std::vector<value_type> dense_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> touched_;
};

/// Incremental sparse Gaussian elimination. The pivot of a row is its least
/// column; stored rows are normalized to a unit pivot. After `finalize` the
/// rows are in reduced echelon form, which is unique for the span, so the
/// result does not depend on insertion order.
template <class K>
class SparseEchelon {
 public:
  using value_type = typename K::value_type;

  SparseEchelon(K field, std::size_t ncols, bool track_combinations = false)
      : field_(std::move(field)), pivot_of_(ncols, -1), track_(track_combinations) {}

  const K& field() const { return field_; }
  std::size_t ncols() const { return pivot_of_.size(); }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == pivot_of_.size(); }
  std::size_t inserted() const { return inserted_; }
  bool tracks_combinations() const { return track_; }

  const SparseVec<K>& row(std::size_t i) const { return rows_[i]; }
  std::uint32_t pivot(std::size_t i) const { return rows_[i].front().first; }
  int row_of_pivot(std::uint32_t col) const { return pivot_of_[col]; }
  /// Combination of inserted rows (by insertion id) equal to row(i).
  const SparseVec<K>& combination(std::size_t i) const { return combos_[i]; }

  /// Returns true if the row was independent of the current span.
  bool insert(SparseVec<K> row) {
    SparseVec<K> combo;
    if (track_) combo.emplace_back(static_cast<std::uint32_t>(inserted_), field_.one());
    ++inserted_;
    SparseVec<K> tmp;
    while (!row.empty()) {
      std::uint32_t lead = row.front().first;
      int r = pivot_of_[lead];
      if (r < 0) break;
      value_type c = field_.neg(row.front().second);
      axpy_merge(field_, row, c, rows_[static_cast<std::size_t>(r)], tmp);
      row.swap(tmp);
      if (track_) {
        axpy_merge(field_, combo, c, combos_[static_cast<std::size_t>(r)], tmp);
        combo.swap(tmp);
      }
    }
    if (row.empty()) return false;
    value_type inv = field_.inv(row.front().second);
    for (auto& e : row) e.second = field_.mul(e.second, inv);
    if (track_)
      for (auto& e : combo) e.second = field_.mul(e.second, inv);
    pivot_of_[row.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    if (track_) combos_.push_back(std::move(combo));
    finalized_ = false;
    return true;
  }

  /// Back-substitution into reduced echelon form; rows are reordered by pivot.
  void finalize() {
    if (finalized_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot(a) < pivot(b); });
    std::vector<SparseVec<K>> rows(rows_.size()), combos(track_ ? rows_.size() : 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      rows[i] = std::move(rows_[order[i]]);
      if (track_) combos[i] = std::move(combos_[order[i]]);
      pivot_of_[rows[i].front().first] = static_cast<int>(i);
    }
    rows_.swap(rows);
    combos_.swap(combos);
    SparseVec<K> tmp;
    for (std::size_t i = rows_.size(); i-- > 0;) {
      SparseVec<K>& row = rows_[i];
      std::size_t pos = 1;
      while (pos < row.size()) {
        int r = pivot_of_[row[pos].first];
        if (r < 0) {
          ++pos;
          continue;
        }
        value_type c = field_.neg(row[pos].second);
        axpy_merge(field_, row, c, rows_[static_cast<std::size_t>(r)], tmp);
        row.swap(tmp);
        if (track_) {
          axpy_merge(field_, combos_[i], c, combos_[static_cast<std::size_t>(r)], tmp);
          combos_[i].swap(tmp);
        }
      }
    }
    finalized_ = true;
  }

  /// Residual of v modulo the span; empty iff v lies in the span. When
  /// `coeffs` is given it receives, per stored row, the multiple subtracted.
  SparseVec<K> reduce(SparseVec<K> v, std::vector<std::pair<std::size_t, value_type>>* coeffs = nullptr) const {
    SparseVec<K> tmp;
    std::size_t pos = 0;
    while (pos < v.size()) {
      int r = pivot_of_[v[pos].first];
      if (r < 0) {
        ++pos;
        continue;
      }
      if (coeffs) coeffs->emplace_back(static_cast<std::size_t>(r), v[pos].second);
      value_type c = field_.neg(v[pos].second);
      axpy_merge(field_, v, c, rows_[static_cast<std::size_t>(r)], tmp);
      v.swap(tmp);
    }
    return v;
  }

 private:
  K field_;
  std::vector<SparseVec<K>> rows_;
  std::vector<SparseVec<K>> combos_;
  std::vector<int> pivot_of_;
  bool track_;
  bool finalized_ = true;
  std::size_t inserted_ = 0;
};

/// Reduced echelon span of NCPolys over an explicit ordered word basis.
template <class K>
class EchelonSpan {
 public:
  EchelonSpan(K field, std::vector<Word> basis, bool track_combinations)
      : basis_(std::move(basis)), echelon_(std::move(field), basis_.size(), track_combinations) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<std::uint32_t>(i));
    if (index_.size() != basis_.size()) throw PreconditionError("word basis contains duplicates");
  }

  const std::vector<Word>& basis() const { return basis_; }
  std::size_t rank() const { return echelon_.rank(); }
  std::size_t ambient() const { return basis_.size(); }
  const SparseEchelon<K>& echelon() const { return echelon_; }
  SparseEchelon<K>& echelon() { return echelon_; }

  SparseVec<K> to_vec(const NCPoly<K>& f) const {
    SparseVec<K> v;
    v.reserve(f.size());
    for (const auto& [w, c] : f.terms()) {
      auto it = index_.find(w);
      if (it == index_.end()) throw PreconditionError("word " + w.to_string() + " is outside the basis");
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  NCPoly<K> to_poly(const SparseVec<K>& v) const {
    NCPoly<K> f(echelon_.field());
    for (const auto& [col, c] : v) f.add_term(basis_[col], c);
    return f;
  }

  /// Stored rows as polynomials (pivot word first in basis order).
  std::vector<NCPoly<K>> rows() const {
    std::vector<NCPoly<K>> out;
    for (std::size_t i = 0; i < echelon_.rank(); ++i) out.push_back(to_poly(echelon_.row(i)));
    return out;
  }

 private:
  std::vector<Word> basis_;
  std::unordered_map<Word, std::uint32_t> index_;
  SparseEchelon<K> echelon_;
};

/// Row-reduces `rows` over `basis`; certificates require `track_combinations`.
template <class K>
EchelonSpan<K> row_reduce(const std::vector<NCPoly<K>>& rows, std::vector<Word> basis, const K& field,
                          bool track_combinations = false) {
  EchelonSpan<K> span(field, std::move(basis), track_combinations);
  for (const auto& r : rows) {
    if (!(r.field() == field)) throw FieldMismatchError();
    span.echelon().insert(span.to_vec(r));
  }
  span.echelon().finalize();
  return span;
}

template <class K>
struct Membership {
  bool member = false;
  /// Coefficients per original row reproducing f, when requested and member.
  std::optional<std::vector<typename K::value_type>> certificate;
};

template <class K>
Membership<K> membership(const NCPoly<K>& f, const EchelonSpan<K>& span, bool want_certificate = false) {
  const auto& field = span.echelon().field();
  if (want_certificate && !span.echelon().tracks_combinations())
    throw PreconditionError("membership certificate needs a span built with combination tracking");
  std::vector<std::pair<std::size_t, typename K::value_type>> used;
  auto residual = span.echelon().reduce(span.to_vec(f), want_certificate ? &used : nullptr);
  Membership<K> m;
  m.member = residual.empty();
  if (m.member && want_certificate) {
    std::vector<typename K::value_type> cert(span.echelon().inserted(), field.zero());
    for (const auto& [row, c] : used)
      for (const auto& [orig, x] : span.echelon().combination(row)) cert[orig] = field.add(cert[orig], field.mul(c, x));
    m.certificate = std::move(cert);
  }
  return m;
}

}  // namespace a3d
