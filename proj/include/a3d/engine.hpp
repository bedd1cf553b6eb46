#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "a3d/relations.hpp"
#include "a3d/sparse.hpp"

namespace a3d {

/// One multihomogeneous component of A_{3,d}: the ambient words in
/// lexicographic order, which of them are normal, and for every other word
/// its normal form (a combination of larger normal words).
template <class K>
struct Component {
  Multidegree delta;
  std::vector<Word> words;
  std::unordered_map<Word, std::uint32_t> index;
  std::vector<std::uint8_t> normal;
  std::vector<SparseVec<K>> nf;
  std::size_t quotient_dim = 0;

  std::size_t ambient() const { return words.size(); }
  std::size_t rank() const { return words.size() - quotient_dim; }
  std::uint32_t find(const Word& w) const {
    auto it = index.find(w);
    if (it == index.end()) throw PreconditionError("word " + w.to_string() + " is not in component " + delta.to_string());
    return it->second;
  }
};

struct ComponentReport {
  Multidegree delta;
  std::size_t ambient = 0;
  std::size_t rank = 0;
  std::size_t quotient = 0;
  std::string field;
};

struct EngineOptions {
  /// 0 keeps the OpenMP default.
  int threads = 0;
  /// Empty disables the on-disk component cache.
  std::filesystem::path cache_dir;
  /// When set, all rows of a component are generated and inserted in a
  /// shuffled order (no early exit). Used to test order independence.
  std::optional<std::uint64_t> shuffle_seed;
  std::size_t chunk = 4096;
};

struct NilpotencyResult {
  int degree = 0;
  /// Sum of quotient dimensions per total degree 1..checked.
  std::vector<std::size_t> graded_dims;
};

inline constexpr const char* kCacheVersion = "a3d-component v1";

/// Decides equalities in A_{3,d} by computing each multihomogeneous component
/// from the components one degree lower. With prefix-first normal forms the
/// two-sided ideal at delta is spanned by left multiples of lower relations
/// plus relation instances whose block spans the whole word.
template <class K>
class A3dEngine {
 public:
  using value_type = typename K::value_type;

  A3dEngine(K field, std::size_t d, EngineOptions opts = {}) : field_(std::move(field)), d_(d), opts_(std::move(opts)) {
    if (d_ < 1) throw PreconditionError("d must be at least 1");
  }

  const K& field() const { return field_; }
  std::size_t d() const { return d_; }

  const Component<K>& component(const Multidegree& delta_in) {
    Multidegree delta = check_delta(delta_in);
    auto it = cache_.find(delta);
    if (it != cache_.end()) return *it->second;
    std::unique_ptr<Component<K>> comp;
    if (!opts_.cache_dir.empty()) comp = load(delta);
    if (!comp) {
      comp = build(delta);
      if (!opts_.cache_dir.empty()) save(*comp);
    }
    return *cache_.emplace(delta, std::move(comp)).first->second;
  }

  ComponentReport report(const Multidegree& delta) {
    const auto& c = component(delta);
    return {c.delta, c.ambient(), c.rank(), c.quotient_dim, field_.name()};
  }

  std::size_t quotient_dimension(const Multidegree& delta) { return component(delta).quotient_dim; }

  /// Reduced echelon span of the ideal component: rows w - NF(w), w non-normal.
  EchelonSpan<K> ideal_component_basis(const Multidegree& delta) {
    const auto& c = component(delta);
    EchelonSpan<K> span(field_, c.words, false);
    for (std::size_t i = 0; i < c.words.size(); ++i) {
      if (c.normal[i]) continue;
      SparseVec<K> row;
      row.emplace_back(static_cast<std::uint32_t>(i), field_.one());
      for (const auto& [j, x] : c.nf[i]) row.emplace_back(j, field_.neg(x));
      span.echelon().insert(std::move(row));
    }
    span.echelon().finalize();
    return span;
  }

  /// Normal form: a combination of normal words equal to f in A_{3,d}.
  NCPoly<K> normal_form(const NCPoly<K>& f) {
    check_poly(f);
    NCPoly<K> out(field_);
    for (const auto& [delta, part] : f.components(d_)) {
      const auto& c = component(delta);
      for (const auto& [w, x] : part.terms()) {
        std::uint32_t i = c.find(w);
        if (c.normal[i]) {
          out.add_term(w, x);
        } else {
          for (const auto& [j, y] : c.nf[i]) out.add_term(c.words[j], field_.mul(x, y));
        }
      }
    }
    return out;
  }

  bool is_zero(const NCPoly<K>& f) { return normal_form(f).is_zero(); }

  /// Least s such that every component of total degree s vanishes, checked
  /// to stay zero for all degrees up to `cap`.
  NilpotencyResult nilpotency_degree(int cap) {
    if (cap < 1) throw PreconditionError("cap must be at least 1");
    NilpotencyResult res;
    for (int s = 1; s <= cap; ++s) {
      std::size_t dim = 0;
      for (const auto& delta : compositions(s, d_)) dim += quotient_dimension(delta);
      res.graded_dims.push_back(dim);
      if (dim == 0 && res.degree == 0) res.degree = s;
      if (dim != 0 && res.degree != 0)
        throw std::logic_error("graded dimension is nonzero at degree " + std::to_string(s) + " above a vanishing degree");
    }
    if (res.degree == 0) throw CapExceededError("no vanishing degree up to cap " + std::to_string(cap));
    return res;
  }

  /// Words of multidegree delta in lexicographic order (memoized).
  const std::vector<Word>& words_of(const Multidegree& delta) {
    auto it = words_.find(delta);
    if (it != words_.end()) return it->second;
    return words_.emplace(delta, enumerate_words(delta)).first->second;
  }

  std::size_t cached_components() const { return cache_.size(); }

 private:
  struct Instance {
    RelationKind kind;
    const Word* a;
    const Word* b;
    const Word* c;
  };

  Multidegree check_delta(const Multidegree& delta) const {
    if (delta.size() > d_) {
      for (std::size_t k = d_; k < delta.size(); ++k)
        if (delta[k] != 0) throw PreconditionError("multidegree " + delta.to_string() + " exceeds d = " + std::to_string(d_));
    }
    return delta.resized(d_);
  }

  void check_poly(const NCPoly<K>& f) const {
    if (!(f.field() == field_)) throw FieldMismatchError();
    if (static_cast<std::size_t>(f.max_index()) > d_)
      throw PreconditionError("polynomial uses index " + std::to_string(f.max_index()) + " > d = " + std::to_string(d_));
    for (const auto& [w, c] : f.terms()) require_nonempty(w, "A3dEngine");
  }

  int thread_count() const {
#ifdef _OPENMP
    return opts_.threads > 0 ? opts_.threads : omp_get_max_threads();
#else
    return 1;
#endif
  }

  std::unique_ptr<Component<K>> build(const Multidegree& delta) {
    auto comp = std::make_unique<Component<K>>();
    comp->delta = delta;
    comp->words = words_of(delta);
    const std::size_t N = comp->words.size();
    comp->index.reserve(N);
    for (std::size_t i = 0; i < N; ++i) comp->index.emplace(comp->words[i], static_cast<std::uint32_t>(i));
    comp->normal.assign(N, 1);
    comp->nf.assign(N, {});
    const int n = delta.total();
    if (n < 3) {
      comp->quotient_dim = N;
      return comp;
    }

    std::vector<const Component<K>*> lower(d_, nullptr);
    for (std::size_t k = 0; k < d_; ++k) {
      if (delta[k] == 0) continue;
      Multidegree m = delta;
      m[k] -= 1;
      lower[k] = &component(m);
    }
    auto lower_of = [&](Letter l) { return lower[static_cast<std::size_t>(l.index() - 1)]; };

    // Candidates: words whose prefix and suffix of length n-1 are both normal.
    std::vector<std::int32_t> cidx(N, -1);
    std::vector<std::uint32_t> cand;
    for (std::size_t i = 0; i < N; ++i) {
      const Word& w = comp->words[i];
      const auto* P = lower_of(w.back());
      if (!P->normal[P->find(w.subword(0, n - 1))]) continue;
      const auto* S = lower_of(w.front());
      if (!S->normal[S->find(w.subword(1, n - 1))]) continue;
      cidx[i] = static_cast<std::int32_t>(cand.size());
      cand.push_back(static_cast<std::uint32_t>(i));
    }
    const std::size_t C = cand.size();

    // phi(w): w rewritten by lower normal forms into candidate coordinates.
    std::vector<SparseVec<K>> phi(N);
    {
      Accumulator<K> acc(field_, C);
      for (std::size_t i = N; i-- > 0;) {
        if (cidx[i] >= 0) {
          phi[i].emplace_back(static_cast<std::uint32_t>(cidx[i]), field_.one());
          continue;
        }
        const Word& w = comp->words[i];
        const auto* P = lower_of(w.back());
        std::uint32_t ip = P->find(w.subword(0, n - 1));
        if (!P->normal[ip]) {
          Word last = w.subword(n - 1, 1);
          for (const auto& [v, c] : P->nf[ip]) acc.add_scaled(phi[comp->find(P->words[v] * last)], c);
        } else {
          const auto* S = lower_of(w.front());
          std::uint32_t is = S->find(w.subword(1, n - 1));
          Word first = w.subword(0, 1);
          for (const auto& [v, c] : S->nf[is]) acc.add_scaled(phi[comp->find(first * S->words[v])], c);
        }
        phi[i] = acc.take();
      }
    }

    SparseEchelon<K> ech(field_, C);
    if (C > 0) eliminate(*comp, lower, phi, ech);
    ech.finalize();

    std::size_t qdim = 0;
    for (std::size_t col = 0; col < C; ++col) {
      if (ech.row_of_pivot(static_cast<std::uint32_t>(col)) < 0) ++qdim;
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (cidx[i] >= 0 && ech.row_of_pivot(static_cast<std::uint32_t>(cidx[i])) < 0) continue;
      comp->normal[i] = 0;
      SparseVec<K> r = ech.reduce(std::move(phi[i]));
      for (auto& e : r) e.first = cand[e.first];
      comp->nf[i] = std::move(r);
      phi[i].clear();
    }
    comp->quotient_dim = qdim;
    return comp;
  }

  void eliminate(const Component<K>& comp, const std::vector<const Component<K>*>& lower,
                 const std::vector<SparseVec<K>>& phi, SparseEchelon<K>& ech) {
    const std::size_t C = ech.ncols();
    std::vector<SparseVec<K>> gathered;
    const bool shuffled = opts_.shuffle_seed.has_value();
    auto submit = [&](SparseVec<K>&& row) {
      if (row.empty()) return;
      if (shuffled)
        gathered.push_back(std::move(row));
      else
        ech.insert(std::move(row));
    };
    auto done = [&] { return !shuffled && ech.full(); };

    // Left multiples of lower relations: f * (s - NF(s)).
    {
      Accumulator<K> acc(field_, C);
      for (std::size_t k = 0; k < d_ && !done(); ++k) {
        const auto* S = lower[k];
        if (!S) continue;
        for (std::size_t s = 0; s < S->words.size() && !done(); ++s) {
          if (S->normal[s]) continue;
          for (bool t : {false, true}) {
            Word f = Word::letter(static_cast<int>(k + 1), t);
            acc.add_scaled(phi[comp.find(f * S->words[s])], field_.one());
            for (const auto& [v, c] : S->nf[s]) acc.add_scaled(phi[comp.find(f * S->words[v])], field_.neg(c));
            submit(acc.take());
          }
        }
      }
    }

    // Relation instances filling the whole component, processed in chunks.
    std::vector<Instance> chunk;
    chunk.reserve(opts_.chunk);
    const int nthreads = thread_count();
    auto flush = [&] {
      std::vector<SparseVec<K>> rows(chunk.size());
#pragma omp parallel num_threads(nthreads)
      {
        Accumulator<K> acc(field_, C);
        std::vector<IntTerm> terms;
#pragma omp for schedule(dynamic, 64)
        for (std::size_t i = 0; i < chunk.size(); ++i) {
          const Instance& in = chunk[i];
          terms.clear();
          static const Word none;
          expand_relation(in.kind, *in.a, in.b ? *in.b : none, in.c ? *in.c : none, terms);
          for (const auto& t : terms) acc.add_scaled(phi[comp.find(t.word)], field_.from_int(t.coeff));
          rows[i] = acc.take();
        }
      }
      for (auto& r : rows) {
        if (done()) break;
        submit(std::move(r));
      }
      chunk.clear();
    };
    auto emit = [&](RelationKind kind, const Word* a, const Word* b, const Word* c) {
      chunk.push_back({kind, a, b, c});
      if (chunk.size() >= opts_.chunk) flush();
      return !done();
    };
    generate_instances(comp.delta, emit);
    if (!chunk.empty() && !done()) flush();

    if (shuffled) {
      std::mt19937_64 rng(*opts_.shuffle_seed);
      std::shuffle(gathered.begin(), gathered.end(), rng);
      for (auto& r : gathered) ech.insert(std::move(r));
    }
  }

  /// Emits every monomial instance of T1, T2, T3, T whose expansion has
  /// multidegree exactly delta, up to the symmetries of each family.
  /// `emit` returns false to stop early.
  template <class Emit>
  void generate_instances(const Multidegree& delta, Emit&& emit) {
    const auto subs = sub_multidegrees(delta);
    bool divisible = true;
    Multidegree third(d_);
    for (std::size_t k = 0; k < d_; ++k) {
      if (delta[k] % 3 != 0) divisible = false;
      third[k] = delta[k] / 3;
    }
    if (divisible)
      for (const Word& a : words_of(third))
        if (!emit(RelationKind::T1, &a, nullptr, nullptr)) return;

    for (const auto& ma : subs) {
      if (!(ma * 2).fits_in(delta) || ma * 2 == delta) continue;
      const Multidegree mb = delta - ma * 2;
      for (const Word& a : words_of(ma))
        for (const Word& b : words_of(mb))
          if (!emit(RelationKind::T2, &a, &b, nullptr)) return;
    }

    for (RelationKind kind : {RelationKind::T3, RelationKind::T}) {
      for (const auto& ma : subs) {
        for (const auto& mb : subs) {
          const Multidegree mab = ma + mb;
          if (!mab.fits_in(delta) || mab == delta) continue;
          const Multidegree mc = delta - mab;
          const auto& wa = words_of(ma);
          const auto& wb = words_of(mb);
          const auto& wc = words_of(mc);
          for (const Word& a : wa) {
            for (const Word& b : wb) {
              if (kind == RelationKind::T3 && b < a) continue;
              if (kind == RelationKind::T && !(b < involute(b))) continue;
              for (const Word& c : wc) {
                if (kind == RelationKind::T3 && c < b) continue;
                if (kind == RelationKind::T && !(c < involute(c))) continue;
                if (!emit(kind, &a, &b, &c)) return;
              }
            }
          }
        }
      }
    }
  }

  std::filesystem::path cache_path(const Multidegree& delta) const {
    std::string name = "d" + std::to_string(d_) + "_c" + std::to_string(field_.characteristic()) + "_m";
    for (std::size_t k = 0; k < delta.size(); ++k) name += (k ? "-" : "") + std::to_string(delta[k]);
    return opts_.cache_dir / (name + ".a3dc");
  }

  void save(const Component<K>& c) const {
    std::filesystem::create_directories(opts_.cache_dir);
    auto path = cache_path(c.delta);
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << kCacheVersion << "\n" << field_.name() << "\n" << d_ << "\n" << c.delta.to_string() << "\n";
      out << c.words.size() << "\n";
      for (const Word& w : c.words) out << w.to_string() << "\n";
      out << c.rank() << "\n";
      for (std::size_t i = 0; i < c.words.size(); ++i) {
        if (c.normal[i]) continue;
        out << i << " " << c.nf[i].size();
        for (const auto& [j, x] : c.nf[i]) out << " " << j << " " << field_.format(field_.neg(x));
        out << "\n";
      }
    }
    std::filesystem::rename(tmp, path);
  }

  /// Returns null when the file is missing or was written for other parameters.
  std::unique_ptr<Component<K>> load(const Multidegree& delta) {
    std::ifstream in(cache_path(delta));
    if (!in) return nullptr;
    std::string line;
    std::getline(in, line);
    if (line != kCacheVersion) return nullptr;
    std::getline(in, line);
    if (line != field_.name()) return nullptr;
    std::getline(in, line);
    if (line != std::to_string(d_)) return nullptr;
    std::getline(in, line);
    if (line != delta.to_string()) return nullptr;
    auto comp = std::make_unique<Component<K>>();
    comp->delta = delta;
    comp->words = words_of(delta);
    std::size_t nwords = 0;
    in >> nwords;
    if (nwords != comp->words.size()) return nullptr;
    std::getline(in, line);
    for (std::size_t i = 0; i < nwords; ++i) {
      std::getline(in, line);
      if (line != comp->words[i].to_string()) return nullptr;
    }
    const std::size_t N = comp->words.size();
    for (std::size_t i = 0; i < N; ++i) comp->index.emplace(comp->words[i], static_cast<std::uint32_t>(i));
    comp->normal.assign(N, 1);
    comp->nf.assign(N, {});
    std::size_t rank = 0;
    in >> rank;
    for (std::size_t r = 0; r < rank; ++r) {
      std::size_t i = 0, len = 0;
      in >> i >> len;
      if (!in || i >= N) return nullptr;
      comp->normal[i] = 0;
      for (std::size_t e = 0; e < len; ++e) {
        std::uint32_t j = 0;
        std::string coeff;
        in >> j >> coeff;
        if (!in || j >= N) return nullptr;
        comp->nf[i].emplace_back(j, field_.neg(field_.from_rational(mpq_class(coeff))));
      }
    }
    if (!in) return nullptr;
    comp->quotient_dim = N - rank;
    return comp;
  }

  K field_;
  std::size_t d_;
  EngineOptions opts_;
  std::map<Multidegree, std::unique_ptr<Component<K>>> cache_;
  std::map<Multidegree, std::vector<Word>> words_;
};

/// x_i, x_i^T -> 1 (deleted). Requires characteristic 3, and every term must
/// keep positive degree and have degree < 3 in index i.
template <class K>
NCPoly<K> pi_substitute(const NCPoly<K>& f, int i) {
  if (f.field().characteristic() != 3)
    throw PreconditionError("pi_substitute requires characteristic 3, got " + f.field().name());
  if (i < 1) throw PreconditionError("pi_substitute: index must be positive");
  NCPoly<K> out(f.field());
  for (const auto& [w, c] : f.terms()) {
    Word img;
    int deg_i = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p].index() == i)
        ++deg_i;
      else
        img.push_back(w[p]);
    }
    if (deg_i >= 3)
      throw PreconditionError("pi_substitute: term " + w.to_string() + " has degree " + std::to_string(deg_i) +
                              " >= 3 in x" + std::to_string(i));
    if (img.empty()) throw PreconditionError("pi_substitute: term " + w.to_string() + " has no letters besides x" + std::to_string(i));
    out.add_term(img, c);
  }
  return out;
}

/// a_d = x1^2 bar(x1)^2 x1 bar(x1) x2^2 ... xd^2.
template <class K>
NCPoly<K> witness_ad(const K& field, int d) {
  if (d < 1) throw PreconditionError("witness_ad requires d >= 1");
  auto x1 = letter_poly(field, 1);
  auto b1 = x1.bar();
  NCPoly<K> f = x1.pow(2) * b1.pow(2) * x1 * b1;
  for (int k = 2; k <= d; ++k) f = f * letter_poly(field, k).pow(2);
  return f;
}

/// Rewrites a single word with the rules x^3 = 0, xcx = -x^2c - cx^2 and
/// xcx^2 = -x^2cx (c free of x) until none applies.
std::vector<IntTerm> rewrite_word(const Word& w);

template <class K>
NCPoly<K> rewrite_fast(const NCPoly<K>& f) {
  NCPoly<K> out(f.field());
  for (const auto& [w, c] : f.terms())
    for (const auto& t : rewrite_word(w)) out.add_term(t.word, f.field().mul(c, f.field().from_int(t.coeff)));
  return out;
}

}  // namespace a3d
