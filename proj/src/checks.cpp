#include "a3d/checks.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "a3d/engine.hpp"
#include "a3d/sigma.hpp"

namespace a3d {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

/// Counts cases of one property and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = what();
  }
  std::size_t cases() const { return cases_; }
  std::size_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

class Runner {
 public:
  Runner(std::string suite, const CheckOptions& opts) : suite_(std::move(suite)), opts_(opts) {}

  void run(const std::string& name, const std::function<void(Tally&, Rng&)>& body) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    Tally tally;
    Rng rng(opts_.seed * 0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(name));
    auto start = Clock::now();
    try {
      body(tally, rng);
      r.passed = tally.failures() == 0 && tally.cases() > 0;
      if (tally.failures())
        r.detail = std::to_string(tally.failures()) + " failing, first: " + tally.first();
      else if (tally.cases() == 0)
        r.detail = "no cases ran";
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.cases = tally.cases();
    results_.push_back(std::move(r));
  }

  const CheckOptions& options() const { return opts_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  CheckOptions opts_;
  std::vector<CheckResult> results_;
};

/// All words of length 1..maxlen over the letters of x_1..x_d.
std::vector<Word> all_words(std::size_t d, std::size_t maxlen) {
  std::vector<Word> out, layer{Word{}};
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (std::uint8_t c = 0; c < 2 * d; ++c) {
        Word v = w;
        v.push_back(Letter::from_code(c));
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Word random_word(Rng& rng, std::size_t d, std::size_t len) {
  std::uniform_int_distribution<int> code(0, static_cast<int>(2 * d) - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(Letter::from_code(static_cast<std::uint8_t>(code(rng))));
  return w;
}

Word random_word(Rng& rng, std::size_t d, int lo, int hi) {
  return random_word(rng, d, static_cast<std::size_t>(std::uniform_int_distribution<int>(lo, hi)(rng)));
}

template <class K>
NCPoly<K> poly_of(const K& f, const Word& w) {
  return NCPoly<K>::monomial(f, w);
}

/// Random element u * R(args) * v of the ideal with total degree at most maxdeg.
template <class K>
NCPoly<K> random_instance(const K& field, Rng& rng, std::size_t d, int maxdeg) {
  static const RelationKind kinds[] = {RelationKind::T1, RelationKind::T2, RelationKind::T3, RelationKind::T};
  for (;;) {
    RelationKind kind = kinds[std::uniform_int_distribution<int>(0, 3)(rng)];
    RelationInstance inst;
    inst.kind = kind;
    int used = 0;
    for (int i = 0; i < arity(kind); ++i) {
      inst.args.push_back(random_word(rng, d, 1, 2));
      used += static_cast<int>(inst.args.back().size());
    }
    if (kind == RelationKind::T1) used *= 3;
    if (kind == RelationKind::T2) used += static_cast<int>(inst.args[0].size());
    if (used > maxdeg) continue;
    int spare = maxdeg - used;
    int l = std::uniform_int_distribution<int>(0, std::min(spare, 2))(rng);
    int r = std::uniform_int_distribution<int>(0, std::min(spare - l, 2))(rng);
    inst.left = random_word(rng, d, static_cast<std::size_t>(l));
    inst.right = random_word(rng, d, static_cast<std::size_t>(r));
    NCPoly<K> f = instance_poly(field, inst);
    if (!f.is_zero()) return f;
  }
}

/// Random combination of ideal instances sharing one multidegree.
template <class K>
NCPoly<K> random_ideal_element(const K& field, Rng& rng, std::size_t d, int maxdeg) {
  for (;;) {
    NCPoly<K> f = random_instance(field, rng, d, maxdeg);
    const Multidegree m = multidegree(f.terms().begin()->first, d);
    for (int tries = 0; tries < 40; ++tries) {
      NCPoly<K> g = random_instance(field, rng, d, maxdeg);
      if (multidegree(g.terms().begin()->first, d) != m) continue;
      f += g.scaled(field.random(rng));
    }
    if (!f.is_zero()) return f;
  }
}

template <class K>
std::string format_words(const NCPoly<K>& a, const NCPoly<K>& b, const NCPoly<K>& c) {
  auto first = [](const NCPoly<K>& f) { return f.terms().begin()->first.to_string(); };
  return first(a) + ", " + first(b) + ", " + first(c);
}

// word-core

void word_core(Runner& run) {
  run.run("involute is an involutive anti-automorphism", [](Tally& t, Rng&) {
    for (const Word& w : all_words(2, 6)) {
      t.expect(involute(involute(w)) == w, [&] { return w.to_string(); });
      for (std::size_t k = 1; k < w.size(); ++k) {
        Word u = w.subword(0, k), v = w.subword(k, w.size() - k);
        t.expect(involute(u * v) == involute(v) * involute(u), [&] { return u.to_string() + " | " + v.to_string(); });
      }
    }
  });
  run.run("class_rep is invariant under rotation and involution", [](Tally& t, Rng&) {
    for (const Word& w : all_words(2, 8)) {
      const Word rep = class_rep(w);
      t.expect(class_rep(involute(w)) == rep, [&] { return w.to_string(); });
      for (std::size_t k = 1; k < w.size(); ++k) t.expect(class_rep(w.rotated(k)) == rep, [&] { return w.to_string(); });
    }
  });
  run.run("multidegree is additive and involution invariant", [](Tally& t, Rng&) {
    for (const Word& w : all_words(3, 5)) {
      t.expect(multidegree(involute(w), 3) == multidegree(w, 3), [&] { return w.to_string(); });
      for (std::size_t k = 1; k < w.size(); ++k) {
        Word u = w.subword(0, k), v = w.subword(k, w.size() - k);
        t.expect(multidegree(u * v, 3) == multidegree(u, 3) + multidegree(v, 3), [&] { return w.to_string(); });
      }
    }
  });
  run.run("classes-only enumeration partitions the full enumeration", [](Tally& t, Rng&) {
    const std::vector<Multidegree> deltas = {{1}, {2}, {3}, {4}, {6}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 1, 1}, {2, 1, 1}};
    for (const auto& delta : deltas) {
      EnumerateOptions opts;
      opts.classes_only = true;
      std::set<Word> reps;
      std::uint64_t covered = 0;
      for (const Word& w : enumerate_words(delta, opts)) {
        covered += class_size(w);
        reps.insert(w);
      }
      bool all_reps = true;
      std::uint64_t total = 0;
      WordEnumerator e(delta);
      while (e.next()) {
        ++total;
        all_reps = all_reps && reps.count(class_rep(e.current()));
      }
      t.expect(covered == total && total == word_count(delta) && all_reps, [&] {
        return delta.to_string() + ": orbit sizes " + std::to_string(covered) + " vs " + std::to_string(total);
      });
    }
  });
}

// exact-linalg

template <class K>
void field_axioms(Tally& t, Rng& rng, const K& f) {
  for (int i = 0; i < 10000; ++i) {
    auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    bool ok = f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
              f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a) &&
              f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) && f.is_zero(f.add(a, f.neg(a))) &&
              f.sub(a, b) == f.add(a, f.neg(b)) && f.mul(a, f.one()) == a;
    if (!f.is_zero(a)) ok = ok && f.is_one(f.mul(a, f.inv(a)));
    t.expect(ok, [&] { return f.name() + " at " + f.format(a) + ", " + f.format(b) + ", " + f.format(c); });
  }
}

template <class K>
NCPoly<K> random_poly(const K& field, Rng& rng, std::size_t d, int terms, int maxlen) {
  NCPoly<K> f(field);
  for (int i = 0; i < terms; ++i) f.add_term(random_word(rng, d, 1, maxlen), field.random(rng));
  return f;
}

template <class K>
void algebra_laws(Tally& t, Rng& rng, const K& field) {
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(field, rng, 2, 3, 3), g = random_poly(field, rng, 2, 3, 3), h = random_poly(field, rng, 2, 3, 3);
    auto alpha = field.random(rng), beta = field.random(rng);
    t.expect((f * g) * h == f * (g * h), [&] { return field.name() + " associativity"; });
    t.expect((f.scaled(alpha) + g.scaled(beta)).bar() == f.bar().scaled(alpha) + g.bar().scaled(beta),
             [&] { return field.name() + " bar linearity"; });
  }
}

void exact_linalg(Runner& run) {
  run.run("field axioms", [](Tally& t, Rng& rng) {
    field_axioms(t, rng, PrimeField(3));
    field_axioms(t, rng, PrimeField(7));
    field_axioms(t, rng, PrimeField(2147483647u));
    field_axioms(t, rng, RationalField{});
  });
  run.run("product is associative and bar is linear", [](Tally& t, Rng& rng) {
    algebra_laws(t, rng, PrimeField(7));
    algebra_laws(t, rng, RationalField{});
  });
  run.run("row_reduce rank is invariant under row permutation", [](Tally& t, Rng& rng) {
    for (const auto& field : {PrimeField(3), PrimeField(101)}) {
      for (int trial = 0; trial < 5; ++trial) {
        const std::vector<Word> basis = all_words(1, 4);
        std::vector<NCPoly<PrimeField>> gens, rows;
        for (int i = 0; i < 12; ++i) {
          NCPoly<PrimeField> g(field);
          for (int k = 0; k < 4; ++k) g.add_term(basis[rng() % basis.size()], field.random(rng));
          gens.push_back(g);
        }
        for (int i = 0; i < 30; ++i) {
          NCPoly<PrimeField> r(field);
          for (const auto& g : gens)
            if (rng() % 3 == 0) r += g.scaled(field.random(rng));
          rows.push_back(r);
        }
        const std::size_t base = row_reduce(rows, basis, field).rank();
        for (int s = 0; s < 20; ++s) {
          std::shuffle(rows.begin(), rows.end(), rng);
          std::size_t r = row_reduce(rows, basis, field).rank();
          t.expect(r == base, [&] { return field.name() + ": rank " + std::to_string(r) + " vs " + std::to_string(base); });
        }
      }
    }
  });
}

// a3d-engine

struct Engines {
  explicit Engines(int threads)
      : f3d2(PrimeField(3), 2, opts(threads)),
        f3d3(PrimeField(3), 3, opts(threads)),
        f5d2(PrimeField(5), 2, opts(threads)),
        f7d2(PrimeField(7), 2, opts(threads)) {}
  static EngineOptions opts(int threads) {
    EngineOptions o;
    o.threads = threads;
    return o;
  }
  A3dEngine<PrimeField> f3d2, f3d3, f5d2, f7d2;
};

template <class Fn>
void for_each_engine(Engines& e, Fn&& fn) {
  fn(e.f3d2, 2);
  fn(e.f5d2, 2);
  fn(e.f7d2, 2);
}

void a3d_engine(Runner& run) {
  Engines eng(run.options().threads);

  run.run("ideal property under letter multiplication", [&](Tally& t, Rng& rng) {
    const std::vector<A3dEngine<PrimeField>*> engines = {&eng.f3d2, &eng.f5d2, &eng.f7d2};
    for (int i = 0; i < 200; ++i) {
      auto& E = *engines[static_cast<std::size_t>(i) % engines.size()];
      NCPoly<PrimeField> f = random_ideal_element(E.field(), rng, 2, 6);
      t.expect(E.is_zero(f), [&] { return "ideal element not zero: " + E.field().name(); });
      Word x = random_word(rng, 2, 1);
      auto X = poly_of(E.field(), x);
      t.expect(E.is_zero(X * f) && E.is_zero(f * X), [&] { return "letter multiple not zero: " + x.to_string(); });
    }
  });

  run.run("(a1...as)^2 = as^2...a1^2", [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 60; ++i) {
      for_each_engine(eng, [&](A3dEngine<PrimeField>& E, std::size_t d) {
        const auto& K = E.field();
        int s = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Word> a;
        int budget = 5;
        for (int k = 0; k < s; ++k) {
          int left = budget - (s - k - 1);
          a.push_back(random_word(rng, d, 1, std::min(left, 3)));
          budget -= static_cast<int>(a.back().size());
        }
        Word prod;
        for (const Word& w : a) prod *= w;
        Word rev;
        for (auto it = a.rbegin(); it != a.rend(); ++it) rev *= *it * *it;
        t.expect(E.is_zero(poly_of(K, prod * prod) - poly_of(K, rev)), [&] { return K.name() + ": " + prod.to_string(); });
      });
    }
  });

  run.run("ab c ba + c a^2 b^2 + b^2 a^2 c = 0", [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 40; ++i) {
      for_each_engine(eng, [&](A3dEngine<PrimeField>& E, std::size_t d) {
        const auto& K = E.field();
        auto a = poly_of(K, random_word(rng, d, 1, 2)), b = poly_of(K, random_word(rng, d, 1, 2)),
             c = poly_of(K, random_word(rng, d, 1, 2));
        auto f = a * b * c * b * a + c * a * a * b * b + b * b * a * a * c;
        t.expect(E.is_zero(f), [&] { return K.name() + ": " + format_words(a, b, c); });
      });
    }
  });

  run.run("bar(a)bar(b)bar(c) + bar(c)bar(b)bar(a) = 0", [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 40; ++i) {
      for_each_engine(eng, [&](A3dEngine<PrimeField>& E, std::size_t d) {
        const auto& K = E.field();
        auto a = poly_of(K, random_word(rng, d, 1, 3)), b = poly_of(K, random_word(rng, d, 1, 3)),
             c = poly_of(K, random_word(rng, d, 1, 3));
        auto f = a.bar() * b.bar() * c.bar() + c.bar() * b.bar() * a.bar();
        t.expect(E.is_zero(f), [&] { return K.name() + ": " + format_words(a, b, c); });
      });
    }
    for (int i = 0; i < 20; ++i) {
      const auto& K = eng.f3d3.field();
      auto a = poly_of(K, random_word(rng, 3, 1, 2)), b = poly_of(K, random_word(rng, 3, 1, 2)),
           c = poly_of(K, random_word(rng, 3, 1, 2));
      auto f = a.bar() * b.bar() * c.bar() + c.bar() * b.bar() * a.bar();
      t.expect(eng.f3d3.is_zero(f), [&] { return "d=3: " + format_words(a, b, c); });
    }
  });

  run.run("bar(a) u bar(b) v bar(c) w bar(e) = 0", [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 30; ++i) {
      for_each_engine(eng, [&](A3dEngine<PrimeField>& E, std::size_t d) {
        const auto& K = E.field();
        std::vector<Word> us;
        int spare = 3;
        for (int k = 0; k < 3; ++k) {
          int len = std::uniform_int_distribution<int>(0, std::min(spare, 1))(rng);
          us.push_back(random_word(rng, d, static_cast<std::size_t>(len)));
          spare -= len;
        }
        std::vector<NCPoly<PrimeField>> bars;
        for (int k = 0; k < 4; ++k) bars.push_back(poly_of(K, random_word(rng, d, 1)).bar());
        auto unit_or = [&](const Word& w) { return NCPoly<PrimeField>::monomial(K, w, K.one(), true); };
        auto f = bars[0] * unit_or(us[0]) * bars[1] * unit_or(us[1]) * bars[2] * unit_or(us[2]) * bars[3];
        t.expect(E.is_zero(f), [&] { return K.name() + " case " + std::to_string(i); });
      });
    }
  });

  run.run("x1...x6 = 0 for characteristic 5 and 7", [&](Tally& t, Rng&) {
    for (std::uint32_t p : {5u, 7u}) {
      A3dEngine<PrimeField> E(PrimeField(p), 6, Engines::opts(run.options().threads));
      std::size_t q = E.quotient_dimension(Multidegree{1, 1, 1, 1, 1, 1});
      t.expect(q == 0, [&] { return "F_" + std::to_string(p) + ": quotient dimension " + std::to_string(q); });
    }
  });

  run.run("quotient dimension is independent of row order and threads", [&](Tally& t, Rng&) {
    struct Case {
      std::uint32_t p;
      std::size_t d;
      Multidegree delta;
    };
    const std::vector<Case> cases = {{3, 1, {5}}, {3, 2, {3, 2}}, {5, 2, {3, 2}}, {3, 3, {2, 1, 1}}};
    for (const auto& c : cases) {
      PrimeField K(c.p);
      A3dEngine<PrimeField> base(K, c.d, Engines::opts(1));
      const auto& ref = base.component(c.delta);
      auto compare = [&](const Component<PrimeField>& other, const std::string& how) {
        bool same = other.quotient_dim == ref.quotient_dim && other.normal == ref.normal;
        for (std::size_t i = 0; same && i < ref.words.size(); ++i) same = other.nf[i] == ref.nf[i];
        t.expect(same, [&] { return K.name() + " " + c.delta.to_string() + " " + how; });
      };
      for (std::uint64_t s : {1u, 2u, 3u}) {
        EngineOptions o;
        o.threads = 1;
        o.shuffle_seed = s;
        A3dEngine<PrimeField> E(K, c.d, o);
        compare(E.component(c.delta), "shuffle " + std::to_string(s));
      }
      for (int threads : {2, 4}) {
        EngineOptions o;
        o.threads = threads;
        o.chunk = 97;
        A3dEngine<PrimeField> E(K, c.d, o);
        compare(E.component(c.delta), std::to_string(threads) + " threads");
      }
    }
  });

  run.run("characteristic 3: literal degree above 3 vanishes", [&](Tally& t, Rng&) {
    A3dEngine<PrimeField> E(PrimeField(3), 1, Engines::opts(run.options().threads));
    const Letter x(1, false), xt(1, true);
    for (const Word& w : all_words(1, 9)) {
      if (w.degree_of(x) <= 3 && w.degree_of(xt) <= 3) continue;
      t.expect(E.is_zero(poly_of(E.field(), w)), [&] { return w.to_string(); });
    }
  });

  run.run("characteristic 3: e = 0 implies pi_i(e) = 0", [&](Tally& t, Rng& rng) {
    auto& E = eng.f3d3;
    const auto& K = E.field();
    int done = 0;
    while (done < 30) {
      NCPoly<PrimeField> e = random_ideal_element(K, rng, 3, 6);
      const Multidegree m = multidegree(e.terms().begin()->first, 3);
      for (int i = 1; i <= 3; ++i) {
        if (m[static_cast<std::size_t>(i - 1)] >= 3 || m.total() - m[static_cast<std::size_t>(i - 1)] == 0) continue;
        if (m[static_cast<std::size_t>(i - 1)] == 0) continue;
        NCPoly<PrimeField> img = pi_substitute(e, i);
        t.expect(E.is_zero(e) && E.is_zero(img), [&] { return "pi_" + std::to_string(i) + " at " + m.to_string(); });
        ++done;
        break;
      }
    }
  });

  run.run("f - rewrite_fast(f) = 0", [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 100; ++i) {
      auto& E = i % 2 ? eng.f5d2 : eng.f3d2;
      const auto& K = E.field();
      NCPoly<PrimeField> f = random_poly(K, rng, 2, 3, 7);
      NCPoly<PrimeField> g = rewrite_fast(f);
      t.expect(E.is_zero(f - g), [&] { return K.name() + " case " + std::to_string(i); });
    }
  });
}

// sigma-calculus

void sigma_calculus(Runner& run) {
  run.run("sigma_{t,r} words: primitive, follow constraint, j*mdeg = (t,r,r), distinct classes", [](Tally& t, Rng&) {
    for (int tt = 0; tt <= 4; ++tt)
      for (int r = 0; r <= 3; ++r) {
        if (tt + r == 0 || tt + 2 * r > 9) continue;
        std::set<Word> reps;
        for (const auto& a : sigma_tr_data(tt, r)) {
          const Word& w = a.word;
          bool follow = true;
          for (std::size_t p = 0; p < w.size(); ++p) follow = follow && sigma_tr_follows(w[p], w[(p + 1) % w.size()]);
          int n2 = w.degree_of(Letter(2, false));
          int n3 = w.degree_of(Letter(3, false));
          const std::string where = "(" + std::to_string(tt) + "," + std::to_string(r) + ") " + w.to_string();
          t.expect(is_primitive(w), [&] { return "not primitive " + where; });
          t.expect(follow, [&] { return "follow constraint " + where; });
          t.expect(multidegree(w, 3) * a.j == Multidegree{tt, r, r}, [&] { return "multidegree " + where; });
          t.expect(is_class_rep(w) && reps.insert(w).second, [&] { return "class " + where; });
          t.expect(a.xi == tt + a.j * (n2 + n3 + 1), [&] { return "xi " + where; });
          t.expect(tt % a.j == 0 && r % a.j == 0, [&] { return "j " + where; });
        }
      }
  });
  run.run("tr kills a - a^T and ab - ba", [](Tally& t, Rng& rng) {
    const RationalField Q;
    for (const Word& w : all_words(2, 6)) {
      t.expect((tr(poly_of(Q, w)) - tr(poly_of(Q, involute(w)))).is_zero(), [&] { return w.to_string(); });
      for (std::size_t k = 1; k < w.size(); ++k) {
        Word a = w.subword(0, k), b = w.subword(k, w.size() - k);
        t.expect(tr(poly_of(Q, a * b)) == tr(poly_of(Q, b * a)), [&] { return a.to_string() + " | " + b.to_string(); });
      }
    }
    for (int i = 0; i < 200; ++i) {
      auto f = random_poly(Q, rng, 2, 3, 4), g = random_poly(Q, rng, 2, 3, 4);
      auto alpha = Q.random(rng), beta = Q.random(rng);
      t.expect(tr(f.scaled(alpha) + g.scaled(beta)) == tr(f).scaled(alpha) + tr(g).scaled(beta), [] { return std::string("linearity"); });
    }
  });
  run.run("sigma_{t,r} is multihomogeneous of multidegree (t,r,r)", [](Tally& t, Rng&) {
    for (int tt = 0; tt <= 4; ++tt)
      for (int r = 0; r <= 3; ++r) {
        if (tt + r == 0 || tt + 2 * r > 9) continue;
        auto s = build_sigma_tr(RationalField{}, tt, r);
        auto comps = s.components(3);
        t.expect(comps.size() == 1 && comps.begin()->first == Multidegree{tt, r, r},
                 [&] { return "(" + std::to_string(tt) + "," + std::to_string(r) + ")"; });
      }
  });
}

// Opt-in stress computation: u1 bar(a1) u2 bar(a2) u3 bar(a3) u4 = 0 with
// deg_{x1} = deg_{x2} = 3 across the u's, at characteristic 3.
void akey(Runner& run) {
  run.run("three bars with x1^3 x2^3 spread over the gaps vanish", [&](Tally& t, Rng&) {
    A3dEngine<PrimeField> E(PrimeField(3), 3, Engines::opts(run.options().threads));
    const auto& K = E.field();
    auto w = [&](const char* s) { return NCPoly<PrimeField>::monomial(K, s[0] ? parse_word(s) : Word{}, K.one(), true); };
    auto b = poly_of(K, Word::letter(3)).bar();
    const std::vector<std::vector<const char*>> gaps = {
        {"x1 x2", "x1 x2", "x1 x2", ""}, {"x1^2", "x2^2", "x1 x2", ""}, {"x1^3", "", "x2^3", ""}};
    for (const auto& u : gaps) {
      auto f = w(u[0]) * b * w(u[1]) * b * w(u[2]) * b * w(u[3]);
      t.expect(E.is_zero(f), [&] { return std::string(u[0]) + " / " + u[1] + " / " + u[2]; });
    }
  });
}

}  // namespace

std::vector<std::string> default_check_suites() { return {"word-core", "exact-linalg", "a3d-engine", "sigma-calculus"}; }

std::vector<std::string> all_check_suites() {
  auto v = default_check_suites();
  v.push_back("akey");
  return v;
}

std::vector<CheckResult> run_check_suite(const std::string& suite, const CheckOptions& opts) {
  Runner run(suite, opts);
  if (suite == "word-core")
    word_core(run);
  else if (suite == "exact-linalg")
    exact_linalg(run);
  else if (suite == "a3d-engine")
    a3d_engine(run);
  else if (suite == "sigma-calculus")
    sigma_calculus(run);
  else if (suite == "akey")
    akey(run);
  else
    throw PreconditionError("unknown check suite '" + suite + "'");
  return run.take();
}

}  // namespace a3d
