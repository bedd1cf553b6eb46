#include "a3d/oracle.hpp"

#include <algorithm>

namespace a3d {

std::vector<CatalogEntry> catalog_at(const Multidegree& m) {
  std::vector<CatalogEntry> out;
  EnumerateOptions opts;
  opts.classes_only = true;
  opts.primitive_only = true;
  for (int t = 1; t <= 3; ++t) {
    bool divisible = true;
    Multidegree base(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] % t) divisible = false;
      base[k] = m[k] / t;
    }
    if (!divisible || base.is_zero()) continue;
    WordEnumerator en(base, opts);
    while (en.next()) out.push_back({t, en.current(), m, m.total()});
  }
  return out;
}

std::vector<CatalogEntry> generator_catalog(std::size_t d, int maxdeg) {
  if (maxdeg < 1) throw PreconditionError("maxdeg must be at least 1");
  if (d < 1) throw PreconditionError("d must be at least 1");
  std::vector<CatalogEntry> out;
  for (int k = 1; k <= maxdeg; ++k)
    for (const auto& m : compositions(k, d)) {
      auto part = catalog_at(m);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

}  // namespace a3d
