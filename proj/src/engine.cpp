#include "a3d/engine.hpp"

#include <algorithm>

namespace a3d {

namespace {

struct Block {
  std::size_t start;
  std::size_t len;
};

// Returns false when w contains a cube of a letter. Otherwise fills `out`
// with the result of one rewriting step, or leaves it empty if w is final.
bool rewrite_step(const Word& w, std::vector<IntTerm>& out) {
  const std::size_t n = w.size();
  std::vector<std::vector<Block>> blocks(256);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && w[j] == w[i]) ++j;
    if (j - i >= 3) return false;
    blocks[w[i].code()].push_back({i, j - i});
    i = j;
  }
  for (const auto& bl : blocks) {
    for (std::size_t b = 0; b + 1 < bl.size(); ++b) {
      const Block& p = bl[b];
      const Block& q = bl[b + 1];
      if (p.len != 1) continue;
      Word left = w.subword(0, p.start);
      Word x = w.subword(p.start, 1);
      Word c = w.subword(p.start + 1, q.start - p.start - 1);
      Word right = w.subword(q.start + q.len, n - q.start - q.len);
      if (q.len == 1) {
        out.push_back({left * x * x * c * right, -1});
        out.push_back({left * c * x * x * right, -1});
        return true;
      }
      out.push_back({left * x * x * c * x * right, -1});
      return true;
    }
  }
  return true;
}

}  // namespace

std::vector<IntTerm> rewrite_word(const Word& w) {
  std::map<Word, long long> acc;
  std::vector<std::pair<Word, long long>> stack{{w, 1}};
  std::vector<IntTerm> step;
  while (!stack.empty()) {
    auto [u, c] = std::move(stack.back());
    stack.pop_back();
    step.clear();
    if (!rewrite_step(u, step)) continue;
    if (step.empty()) {
      acc[u] += c;
      continue;
    }
    for (auto& t : step) stack.emplace_back(std::move(t.word), c * t.coeff);
  }
  std::vector<IntTerm> out;
  for (const auto& [u, c] : acc)
    if (c != 0) out.push_back({u, static_cast<int>(c)});
  return out;
}

}  // namespace a3d
