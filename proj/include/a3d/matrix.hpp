#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "a3d/evalfield.hpp"
#include "a3d/ncpoly.hpp"
#include "a3d/sigma.hpp"

namespace a3d {

template <class E>
struct Mat3 {
  using value_type = typename E::value_type;
  std::array<value_type, 9> a;

  value_type& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  const value_type& operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }
};

template <class E>
Mat3<E> mat_zero(const E& f) {
  Mat3<E> m;
  m.a.fill(f.zero());
  return m;
}

template <class E>
Mat3<E> mat_identity(const E& f) {
  Mat3<E> m = mat_zero(f);
  for (int i = 0; i < 3; ++i) m(i, i) = f.one();
  return m;
}

template <class E>
Mat3<E> mat_mul(const E& f, const Mat3<E>& x, const Mat3<E>& y) {
  Mat3<E> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto s = f.mul(x(i, 0), y(0, j));
      s = f.add(s, f.mul(x(i, 1), y(1, j)));
      r(i, j) = f.add(s, f.mul(x(i, 2), y(2, j)));
    }
  return r;
}

template <class E>
Mat3<E> mat_add(const E& f, const Mat3<E>& x, const Mat3<E>& y) {
  Mat3<E> r;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

template <class E>
Mat3<E> mat_scale(const E& f, const typename E::value_type& c, const Mat3<E>& x) {
  Mat3<E> r;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = f.mul(c, x.a[i]);
  return r;
}

template <class E>
Mat3<E> mat_transpose(const Mat3<E>& x) {
  Mat3<E> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = x(j, i);
  return r;
}

template <class E>
typename E::value_type mat_trace(const E& f, const Mat3<E>& x) {
  return f.add(f.add(x(0, 0), x(1, 1)), x(2, 2));
}

/// Sum of the three principal 2x2 minors.
template <class E>
typename E::value_type mat_sigma2(const E& f, const Mat3<E>& x) {
  auto minor = [&](int i, int j) { return f.sub(f.mul(x(i, i), x(j, j)), f.mul(x(i, j), x(j, i))); };
  return f.add(f.add(minor(0, 1), minor(0, 2)), minor(1, 2));
}

template <class E>
typename E::value_type mat_det(const E& f, const Mat3<E>& x) {
  auto c0 = f.sub(f.mul(x(1, 1), x(2, 2)), f.mul(x(1, 2), x(2, 1)));
  auto c1 = f.sub(f.mul(x(1, 0), x(2, 2)), f.mul(x(1, 2), x(2, 0)));
  auto c2 = f.sub(f.mul(x(1, 0), x(2, 1)), f.mul(x(1, 1), x(2, 0)));
  return f.add(f.sub(f.mul(x(0, 0), c0), f.mul(x(0, 1), c1)), f.mul(x(0, 2), c2));
}

/// sigma_t of a 3x3 matrix; zero for t > 3.
template <class E>
typename E::value_type mat_sigma(const E& f, int t, const Mat3<E>& x) {
  switch (t) {
    case 0: return f.one();
    case 1: return mat_trace(f, x);
    case 2: return mat_sigma2(f, x);
    case 3: return mat_det(f, x);
    default:
      if (t < 0) throw PreconditionError("sigma_t requires t >= 0");
      return f.zero();
  }
}

/// Instantiation of the generic matrices X_1..X_d.
template <class E>
struct EvaluationPoint {
  std::vector<Mat3<E>> X;
  std::vector<Mat3<E>> XT;

  std::size_t d() const { return X.size(); }
  const Mat3<E>& letter(Letter l) const {
    std::size_t k = static_cast<std::size_t>(l.index() - 1);
    if (k >= X.size()) throw PreconditionError("letter index " + std::to_string(l.index()) + " exceeds d = " + std::to_string(X.size()));
    return l.transposed() ? XT[k] : X[k];
  }
};

inline std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint64_t out[1];
  seq.generate(reinterpret_cast<std::uint32_t*>(out), reinterpret_cast<std::uint32_t*>(out) + 2);
  return out[0];
}

/// Point `index` of the stream fixed by `seed`; independent of evaluation order.
template <class E>
EvaluationPoint<E> sample_point(const E& f, std::size_t d, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(point_seed(seed, index));
  EvaluationPoint<E> pt;
  for (std::size_t k = 0; k < d; ++k) {
    Mat3<E> m;
    for (auto& v : m.a) v = f.random(rng);
    pt.X.push_back(m);
    pt.XT.push_back(mat_transpose(m));
  }
  return pt;
}

template <class E>
EvaluationPoint<E> make_point(const std::vector<Mat3<E>>& X) {
  EvaluationPoint<E> pt;
  pt.X = X;
  for (const auto& m : X) pt.XT.push_back(mat_transpose(m));
  return pt;
}

template <class E>
Mat3<E> eval_word(const E& f, const EvaluationPoint<E>& pt, const Word& w) {
  if (w.empty()) return mat_identity(f);
  Mat3<E> r = pt.letter(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) r = mat_mul(f, r, pt.letter(w[i]));
  return r;
}

/// Maps an exact coefficient into the evaluation field.
template <class E>
typename E::value_type coeff_to_eval(const E& f, const PrimeField& k, PrimeField::value_type c) {
  if (f.characteristic() != k.characteristic()) throw FieldMismatchError();
  return f.from_int(static_cast<long long>(c));
}

template <class E>
typename E::value_type coeff_to_eval(const E& f, const RationalField&, const mpq_class& c) {
  return f.from_rational(c);
}

template <class E, class K>
Mat3<E> eval_ncpoly(const E& f, const EvaluationPoint<E>& pt, const NCPoly<K>& p) {
  Mat3<E> r = mat_zero(f);
  for (const auto& [w, c] : p.terms()) r = mat_add(f, r, mat_scale(f, coeff_to_eval(f, p.field(), c), eval_word(f, pt, w)));
  return r;
}

template <class E, class K>
typename E::value_type eval_sigma_poly(const E& f, const SigmaPoly<K>& s, const EvaluationPoint<E>& pt) {
  auto total = f.zero();
  for (const auto& [m, c] : s.terms()) {
    auto v = coeff_to_eval(f, s.field(), c);
    for (const auto& fac : m.factors()) {
      if (f.is_zero(v)) break;
      v = f.mul(v, mat_sigma(f, fac.t, eval_word(f, pt, fac.arg)));
    }
    total = f.add(total, v);
  }
  return total;
}

}  // namespace a3d
