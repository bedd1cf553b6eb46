#include "a3d/sigma.hpp"

#include <algorithm>
#include <numeric>

namespace a3d {

SigmaFactor sigma_factor(int t, const Word& w) {
  if (t < 1) throw PreconditionError("sigma_t requires t >= 1");
  require_nonempty(w, "sigma argument");
  return {t, class_rep(w)};
}

SigmaMonomial::SigmaMonomial(std::vector<SigmaFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

SigmaMonomial SigmaMonomial::operator*(const SigmaMonomial& o) const {
  std::vector<SigmaFactor> fs;
  fs.reserve(factors_.size() + o.factors_.size());
  std::merge(factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(), std::back_inserter(fs));
  SigmaMonomial m;
  m.factors_ = std::move(fs);
  return m;
}

Multidegree SigmaMonomial::multidegree(std::size_t d) const {
  Multidegree m(d);
  for (const auto& f : factors_) m = m + a3d::multidegree(f.arg, d) * f.t;
  return m;
}

int SigmaMonomial::degree() const {
  int n = 0;
  for (const auto& f : factors_) n += f.t * static_cast<int>(f.arg.size());
  return n;
}

int SigmaMonomial::max_index() const {
  int k = 0;
  for (const auto& f : factors_) k = std::max(k, f.arg.max_index());
  return k;
}

bool sigma_tr_follows(Letter a, Letter b) {
  auto group_of = [](Letter l) {
    // Group A = {x1, x2, x2^T}, group B = {x1^T, x3, x3^T}.
    if (l.index() == 1) return l.transposed() ? 1 : 0;
    return l.index() == 2 ? 0 : 1;
  };
  if (a.index() > 3 || b.index() > 3) return false;
  // x1, x3, x3^T are followed by group A; x1^T, x2, x2^T by group B.
  bool wants_a = (a.index() == 1 && !a.transposed()) || a.index() == 3;
  return group_of(b) == (wants_a ? 0 : 1);
}

std::vector<SigmaTRDatum> sigma_tr_data(int t, int r) {
  if (t < 0 || r < 0) throw PreconditionError("sigma_{t,r} requires t, r >= 0");
  std::vector<SigmaTRDatum> out;
  if (t == 0 && r == 0) return out;
  const int g = std::gcd(t, r);
  EnumerateOptions opts;
  opts.follows = sigma_tr_follows;
  opts.cyclic_follow = true;
  opts.classes_only = true;
  opts.primitive_only = true;
  for (int j = 1; j <= g; ++j) {
    if (g % j != 0) continue;
    WordEnumerator en(Multidegree{t / j, r / j, r / j}, opts);
    while (en.next()) {
      const Word& w = en.current();
      int plain23 = w.degree_of(Letter(2, false)) + w.degree_of(Letter(3, false));
      out.push_back({w, j, t + j * (plain23 + 1)});
    }
  }
  return out;
}

}  // namespace a3d
