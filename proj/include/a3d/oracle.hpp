#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "a3d/matrix.hpp"

namespace a3d {

/// sigma_t(w) for a primitive class representative w.
struct CatalogEntry {
  int t = 1;
  Word w;
  Multidegree mdeg;
  int degree = 0;

  SigmaFactor factor() const { return {t, w}; }
};

/// All sigma_t(w), t in 1..3, w a primitive class representative with
/// t * |w| <= maxdeg, sorted by degree, multidegree, t, word.
std::vector<CatalogEntry> generator_catalog(std::size_t d, int maxdeg);
/// Catalog entries of multidegree exactly m.
std::vector<CatalogEntry> catalog_at(const Multidegree& m);

struct Verdict {
  bool decomposable = false;
  std::size_t samples = 0;
  std::size_t candidates = 0;
  /// Bound on the probability that some randomized step behind the verdict erred.
  double error_bound = 0;
  /// Decomposition of the target over products of minimal generators.
  std::vector<std::pair<SigmaMonomial, std::string>> certificate;
};

struct DmaxResult {
  /// Number of indecomposable generators found per degree 1..cap.
  std::vector<std::size_t> new_generators;
  int dmax = 0;
  std::size_t samples = 0;
  double error_bound = 0;
};

/// Dense echelon over E on value vectors; optionally tracks combinations.
template <class E>
class DenseSpan {
 public:
  using value_type = typename E::value_type;
  using Vec = std::vector<value_type>;

  DenseSpan(E f, bool track) : f_(std::move(f)), track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Reduces v; returns the residual and (if tracking) the combination of
  /// inserted vectors subtracted.
  Vec reduce(Vec v, Vec* combo = nullptr) const {
    if (combo) combo->assign(inserted_, f_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (f_.is_zero(c)) continue;
      const auto nc = f_.neg(c);
      const Vec& row = rows_[r];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!f_.is_zero(row[j])) v[j] = f_.add(v[j], f_.mul(nc, row[j]));
      if (combo)
        for (std::size_t j = 0; j < combos_[r].size(); ++j)
          (*combo)[j] = f_.add((*combo)[j], f_.mul(c, combos_[r][j]));
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_null(reduce(v)); }

  /// Returns true if v was independent.
  bool insert(Vec v) {
    Vec combo;
    Vec res = reduce(std::move(v), track_ ? &combo : nullptr);
    std::size_t id = inserted_++;
    std::size_t piv = 0;
    while (piv < res.size() && f_.is_zero(res[piv])) ++piv;
    if (piv == res.size()) return false;
    auto inv = f_.inv(res[piv]);
    for (auto& x : res) x = f_.mul(x, inv);
    rows_.push_back(std::move(res));
    pivots_.push_back(piv);
    if (track_) {
      // row = (v - combo) / lead
      Vec c(inserted_, f_.zero());
      for (std::size_t j = 0; j < combo.size(); ++j) c[j] = f_.mul(f_.neg(combo[j]), inv);
      c[id] = inv;
      combos_.push_back(std::move(c));
      for (auto& old : combos_) old.resize(inserted_, f_.zero());
    }
    return true;
  }

  bool is_null(const Vec& v) const {
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }

 private:
  E f_;
  bool track_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;
  std::size_t inserted_ = 0;
};

struct OracleOptions {
  std::uint64_t seed = 1;
  /// 0 selects the sample count automatically (candidates + margin).
  std::size_t samples = 0;
  std::size_t margin = 10;
  int threads = 0;
};

/// Randomized decomposability oracle for O(3)-invariants of d generic 3x3
/// matrices. Minimal generators are found degree by degree over the box
/// below each queried multidegree; the decomposable part at m is spanned by
/// products of at least two minimal generators of total multidegree m.
template <class E>
class O3Oracle {
 public:
  using value_type = typename E::value_type;
  using Vec = std::vector<value_type>;

  O3Oracle(E field, std::size_t d, OracleOptions opts = {}) : f_(std::move(field)), d_(d), opts_(opts) {
    if (d_ < 1) throw PreconditionError("d must be at least 1");
    samples_ = opts_.samples ? opts_.samples : 32;
  }

  const E& field() const { return f_; }
  std::size_t d() const { return d_; }
  std::size_t samples() const { return samples_; }
  std::uint64_t seed() const { return opts_.seed; }

  const std::vector<EvaluationPoint<E>>& points() {
    ensure_points();
    return points_;
  }

  /// Values of an arbitrary invariant at the sample points.
  Vec evaluate(const std::function<value_type(const EvaluationPoint<E>&)>& fn) {
    ensure_points();
    Vec out(points_.size());
    const int nthreads = thread_count();
#pragma omp parallel for num_threads(nthreads) schedule(static)
    for (std::size_t i = 0; i < points_.size(); ++i) out[i] = fn(points_[i]);
    return out;
  }

  template <class K>
  Vec evaluate(const SigmaPoly<K>& s) {
    return evaluate([&](const EvaluationPoint<E>& pt) { return eval_sigma_poly(f_, s, pt); });
  }

  template <class K>
  Verdict decomposable(const SigmaPoly<K>& target, const Multidegree& delta_in, bool want_certificate = false) {
    const Multidegree delta = fit(delta_in);
    if (target.max_index() > static_cast<int>(d_)) throw PreconditionError("target uses an index above d");
    const auto comps = target.components(d_);
    if (comps.size() > 1 || (comps.size() == 1 && comps.begin()->first != delta))
      throw PreconditionError("target is not multihomogeneous of multidegree " + delta.to_string());
    for (;;) {
      try {
        return decide(delta, [&] { return evaluate(target); }, want_certificate);
      } catch (const Resample&) {
        grow();
      }
    }
  }

  /// Decomposability of an invariant given as a value function.
  Verdict decomposable_fn(const std::function<value_type(const EvaluationPoint<E>&)>& fn, const Multidegree& delta_in) {
    const Multidegree delta = fit(delta_in);
    for (;;) {
      try {
        return decide(delta, [&] { return evaluate(fn); }, false);
      } catch (const Resample&) {
        grow();
      }
    }
  }

  /// Minimal generators (catalog entries) chosen at multidegree m.
  std::vector<CatalogEntry> minimal_generators(const Multidegree& m_in) {
    const Multidegree m = fit(m_in);
    for (;;) {
      try {
        return level(m).gens;
      } catch (const Resample&) {
        grow();
      }
    }
  }

  DmaxResult dmax_scan(int cap) {
    if (cap < 1) throw PreconditionError("cap must be at least 1");
    for (;;) {
      try {
        DmaxResult res;
        for (int k = 1; k <= cap; ++k) {
          std::size_t count = 0;
          for (const auto& m : compositions(k, d_)) {
            const auto& lv = level(m);
            count += lv.gens.size();
            res.error_bound += lv.local;
          }
          res.new_generators.push_back(count);
          if (count) res.dmax = k;
        }
        res.samples = samples_;
        return res;
      } catch (const Resample&) {
        grow();
      }
    }
  }

 private:
  struct Resample {};

  struct Level {
    std::vector<CatalogEntry> gens;
    std::vector<Vec> gen_values;
    std::vector<SigmaMonomial> products;
    std::unique_ptr<DenseSpan<E>> decomposables;  // spans products, tracking
    double local = 0;        // Schwartz-Zippel bound for choices made at m
    double lower_error = 0;  // sum of `local` over the box strictly below m
  };

  Multidegree fit(const Multidegree& m) const {
    for (std::size_t k = d_; k < m.size(); ++k)
      if (m[k] != 0) throw PreconditionError("multidegree " + m.to_string() + " exceeds d");
    Multidegree r = m.resized(d_);
    if (r.is_zero()) throw PreconditionError("multidegree must be nonzero");
    return r;
  }

  int thread_count() const {
#ifdef _OPENMP
    return opts_.threads > 0 ? opts_.threads : omp_get_max_threads();
#else
    return 1;
#endif
  }

  void ensure_points() {
    if (points_.size() == samples_) return;
    points_.resize(samples_);
    const int nthreads = thread_count();
#pragma omp parallel for num_threads(nthreads) schedule(static)
    for (std::size_t i = 0; i < samples_; ++i) points_[i] = sample_point(f_, d_, opts_.seed, i);
  }

  void grow() {
    samples_ = std::max(needed_, samples_ * 2);
    levels_.clear();
  }

  void require_samples(std::size_t candidates) {
    std::size_t need = candidates + opts_.margin;
    if (need <= samples_) return;
    if (opts_.samples)
      throw PreconditionError("insufficient samples: " + std::to_string(samples_) + " < " + std::to_string(candidates) +
                              " candidates + " + std::to_string(opts_.margin) + " margin");
    needed_ = need;
    throw Resample{};
  }

  Vec product_values(const SigmaMonomial& m) {
    std::vector<const Vec*> parts;
    for (const auto& fac : m.factors()) parts.push_back(&gen_value(fac));
    Vec out(samples_, f_.one());
    for (const Vec* p : parts)
      for (std::size_t i = 0; i < samples_; ++i) out[i] = f_.mul(out[i], (*p)[i]);
    return out;
  }

  const Vec& gen_value(const SigmaFactor& fac) {
    auto it = values_.find(fac);
    if (it != values_.end() && it->second.size() == samples_) return it->second;
    ensure_points();
    Vec v(samples_);
    const int nthreads = thread_count();
#pragma omp parallel for num_threads(nthreads) schedule(static)
    for (std::size_t i = 0; i < samples_; ++i) v[i] = mat_sigma(f_, fac.t, eval_word(f_, points_[i], fac.arg));
    return values_[fac] = std::move(v);
  }

  /// Products of >= 2 minimal generators from strictly lower multidegrees
  /// summing to m, as sorted multisets.
  std::vector<SigmaMonomial> candidate_products(const Multidegree& m) {
    std::vector<std::pair<Multidegree, SigmaFactor>> pool;
    for (const auto& sub : sub_multidegrees(m)) {
      if (sub == m) continue;
      for (const auto& g : level(sub).gens) pool.emplace_back(sub, g.factor());
    }
    std::vector<SigmaMonomial> out;
    std::vector<SigmaFactor> cur;
    auto rec = [&](auto&& self, std::size_t from, const Multidegree& left) -> void {
      if (left.is_zero()) {
        if (cur.size() >= 2) out.emplace_back(cur);
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (!pool[i].first.fits_in(left)) continue;
        cur.push_back(pool[i].second);
        self(self, i, left - pool[i].first);
        cur.pop_back();
      }
    };
    rec(rec, 0, m);
    return out;
  }

  Level& level(const Multidegree& m) {
    auto it = levels_.find(m);
    if (it != levels_.end()) return it->second;
    Level lv;
    for (const auto& sub : sub_multidegrees(m)) {
      if (sub == m) continue;
      lv.lower_error += level(sub).local;
    }
    lv.products = candidate_products(m);
    const auto catalog = catalog_at(m);
    require_samples(lv.products.size() + catalog.size());
    lv.decomposables = std::make_unique<DenseSpan<E>>(f_, true);
    for (const auto& p : lv.products) lv.decomposables->insert(product_values(p));
    DenseSpan<E> with_gens = *lv.decomposables;
    const double deg = static_cast<double>(m.total());
    for (const auto& c : catalog) {
      Vec v = gen_value(c.factor());
      if (with_gens.insert(v)) {
        lv.gens.push_back(c);
        lv.gen_values.push_back(std::move(v));
      } else {
        lv.local += static_cast<double>(with_gens.rank() + 1) * deg / f_.size();
      }
    }
    return levels_.emplace(m, std::move(lv)).first->second;
  }

  template <class Values>
  Verdict decide(const Multidegree& delta, Values&& values, bool want_certificate) {
    Level& lv = level(delta);
    Verdict v;
    v.candidates = lv.products.size();
    require_samples(v.candidates);
    Vec target = values();
    Vec combo;
    Vec res = lv.decomposables->reduce(target, want_certificate ? &combo : nullptr);
    v.decomposable = lv.decomposables->is_null(res);
    v.samples = samples_;
    v.error_bound = lv.lower_error;
    if (v.decomposable)
      v.error_bound += static_cast<double>(lv.decomposables->rank() + 1) * static_cast<double>(delta.total()) / f_.size();
    if (v.decomposable && want_certificate)
      for (std::size_t i = 0; i < combo.size(); ++i)
        if (!f_.is_zero(combo[i])) v.certificate.emplace_back(lv.products[i], f_.format(combo[i]));
    return v;
  }

  E f_;
  std::size_t d_;
  OracleOptions opts_;
  std::size_t samples_;
  std::size_t needed_ = 0;
  std::vector<EvaluationPoint<E>> points_;
  std::map<SigmaFactor, Vec> values_;
  std::map<Multidegree, Level> levels_;
};

/// Recovers the coefficient of prod_k w_k^{target[k]} from a function that is
/// polynomial in the auxiliary weights w_k of degree at most max_degrees[k],
/// by tensor Lagrange interpolation at distinct nodes.
template <class E>
std::vector<typename E::value_type> extract_component(
    const E& f, const std::function<std::vector<typename E::value_type>(const std::vector<typename E::value_type>&)>& fn,
    const std::vector<int>& max_degrees, const std::vector<int>& target) {
  using V = typename E::value_type;
  if (max_degrees.size() != target.size()) throw PreconditionError("extract_component: degree vectors differ in length");
  const std::size_t nw = max_degrees.size();
  // weights[k][i]: contribution of node i to the coefficient of w_k^target[k]
  std::vector<std::vector<V>> weights(nw);
  std::vector<std::vector<V>> nodes(nw);
  for (std::size_t k = 0; k < nw; ++k) {
    const int D = max_degrees[k];
    if (D < 0 || target[k] < 0 || target[k] > D) throw PreconditionError("extract_component: bad degrees");
    if (static_cast<double>(D) + 1 > f.size()) throw PreconditionError("extract_component: not enough distinct nodes");
    for (int i = 0; i <= D; ++i) nodes[k].push_back(f.element(static_cast<std::uint64_t>(i)));
    for (int i = 0; i <= D; ++i) {
      std::vector<V> poly{f.one()};
      V denom = f.one();
      for (int j = 0; j <= D; ++j) {
        if (j == i) continue;
        std::vector<V> next(poly.size() + 1, f.zero());
        for (std::size_t e = 0; e < poly.size(); ++e) {
          next[e + 1] = f.add(next[e + 1], poly[e]);
          next[e] = f.sub(next[e], f.mul(nodes[k][static_cast<std::size_t>(j)], poly[e]));
        }
        poly.swap(next);
        V diff = f.sub(nodes[k][static_cast<std::size_t>(i)], nodes[k][static_cast<std::size_t>(j)]);
        if (f.is_zero(diff)) throw PreconditionError("extract_component: degenerate interpolation nodes");
        denom = f.mul(denom, diff);
      }
      weights[k].push_back(f.mul(poly[static_cast<std::size_t>(target[k])], f.inv(denom)));
    }
  }
  std::vector<V> out;
  std::vector<std::size_t> idx(nw, 0);
  std::vector<V> w(nw);
  for (;;) {
    V coeff = f.one();
    for (std::size_t k = 0; k < nw; ++k) {
      w[k] = nodes[k][idx[k]];
      coeff = f.mul(coeff, weights[k][idx[k]]);
    }
    if (!f.is_zero(coeff)) {
      auto vals = fn(w);
      if (out.empty()) out.assign(vals.size(), f.zero());
      if (vals.size() != out.size()) throw PreconditionError("extract_component: inconsistent vector lengths");
      for (std::size_t i = 0; i < vals.size(); ++i) out[i] = f.add(out[i], f.mul(coeff, vals[i]));
    }
    std::size_t k = 0;
    while (k < nw && ++idx[k] > static_cast<std::size_t>(max_degrees[k])) idx[k++] = 0;
    if (k == nw) break;
  }
  return out;
}

}  // namespace a3d
