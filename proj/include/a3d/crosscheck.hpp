#pragma once

#include "a3d/engine.hpp"
#include "a3d/oracle.hpp"

namespace a3d {

struct CrossCheck {
  bool zero = false;
  bool decomposable = false;
  bool agree = false;
  Multidegree delta;
  std::size_t samples = 0;
  double error_bound = 0;
};

/// Compares "u = 0 in A_{3,d}" with "tr(u x_j) is decomposable" (or
/// tr(u x_j^2) when `squared`, characteristic 3 only). u must be
/// multihomogeneous and free of x_j.
template <class K, class E>
CrossCheck trace_crosscheck(A3dEngine<K>& engine, O3Oracle<E>& oracle, const NCPoly<K>& u, int j, bool squared = false) {
  if (u.is_zero()) throw PreconditionError("trace_crosscheck: u is zero as a polynomial");
  if (j < 1 || static_cast<std::size_t>(j) > oracle.d())
    throw PreconditionError("trace_crosscheck: index " + std::to_string(j) + " exceeds the oracle's d = " + std::to_string(oracle.d()));
  if (squared && engine.field().characteristic() != 3)
    throw PreconditionError("trace_crosscheck: the x_j^2 variant requires characteristic 3");
  for (const auto& [w, c] : u.terms())
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].index() == j) throw PreconditionError("trace_crosscheck: u involves x" + std::to_string(j));
  const auto comps = u.components(oracle.d());
  if (comps.size() != 1) throw PreconditionError("trace_crosscheck: u is not multihomogeneous");

  CrossCheck r;
  r.zero = engine.is_zero(u);
  NCPoly<K> xj = letter_poly(u.field(), j);
  SigmaPoly<K> target = tr(u * (squared ? xj * xj : xj));
  r.delta = comps.begin()->first;
  r.delta[static_cast<std::size_t>(j - 1)] += squared ? 2 : 1;
  Verdict v = oracle.decomposable(target, r.delta);
  r.decomposable = v.decomposable;
  r.agree = r.zero == r.decomposable;
  r.samples = v.samples;
  r.error_bound = v.error_bound;
  return r;
}

}  // namespace a3d
