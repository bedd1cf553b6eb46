#include "a3d/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace a3d {

Multidegree::Multidegree(std::initializer_list<int> entries) : entries_(entries) {
  for (int e : entries_)
    if (e < 0) throw PreconditionError("multidegree with negative entry");
}

Multidegree::Multidegree(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw PreconditionError("multidegree with negative entry");
}

int Multidegree::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Multidegree::fits_in(const Multidegree& bound) const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    int b = k < bound.size() ? bound[k] : 0;
    if (entries_[k] > b) return false;
  }
  return true;
}

Multidegree Multidegree::operator+(const Multidegree& other) const {
  Multidegree r(std::max(size(), other.size()));
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = (k < size() ? entries_[k] : 0) + (k < other.size() ? other[k] : 0);
  return r;
}

Multidegree Multidegree::operator-(const Multidegree& other) const {
  Multidegree r(std::max(size(), other.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = (k < size() ? entries_[k] : 0) - (k < other.size() ? other[k] : 0);
    if (r[k] < 0) throw PreconditionError("multidegree subtraction underflow");
  }
  return r;
}

Multidegree Multidegree::operator*(int factor) const {
  Multidegree r = *this;
  for (int& e : r.entries_) e *= factor;
  return r;
}

Multidegree Multidegree::resized(std::size_t d) const {
  Multidegree r(d);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k < d)
      r[k] = entries_[k];
    else if (entries_[k] != 0)
      throw PreconditionError("multidegree does not fit in " + std::to_string(d) + " indices");
  }
  return r;
}

std::string Multidegree::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s;
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) codes_.push_back(static_cast<char8_t>(l.code()));
}

Word::Word(const std::vector<Letter>& letters) {
  for (Letter l : letters) codes_.push_back(static_cast<char8_t>(l.code()));
}

Word Word::from_codes(std::u8string codes) {
  Word w;
  w.codes_ = std::move(codes);
  return w;
}

Word Word::operator*(const Word& other) const {
  Word r;
  r.codes_.reserve(size() + other.size());
  r.codes_ = codes_;
  r.codes_ += other.codes_;
  return r;
}

Word& Word::operator*=(const Word& other) {
  codes_ += other.codes_;
  return *this;
}

Word& Word::push_back(Letter l) {
  codes_.push_back(static_cast<char8_t>(l.code()));
  return *this;
}

Word Word::pow(int k) const {
  if (k < 0) throw PreconditionError("negative word power");
  Word r;
  for (int i = 0; i < k; ++i) r.codes_ += codes_;
  return r;
}

Word Word::subword(std::size_t pos, std::size_t len) const { return from_codes(codes_.substr(pos, len)); }

Word Word::rotated(std::size_t shift) const {
  if (empty()) return *this;
  shift %= size();
  return from_codes(codes_.substr(shift) + codes_.substr(0, shift));
}

int Word::max_index() const {
  int m = 0;
  for (char8_t c : codes_) m = std::max(m, Letter::from_code(static_cast<std::uint8_t>(c)).index());
  return m;
}

int Word::degree_of(Letter l) const {
  return static_cast<int>(std::count(codes_.begin(), codes_.end(), static_cast<char8_t>(l.code())));
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::string s;
  std::size_t i = 0;
  while (i < size()) {
    std::size_t j = i;
    while (j < size() && codes_[j] == codes_[i]) ++j;
    Letter l = (*this)[i];
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(l.index());
    if (l.transposed()) s += '\'';
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }
std::ostream& operator<<(std::ostream& os, const Multidegree& m) { return os << '(' << m.to_string() << ')'; }

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw PreconditionError(std::string(what) + ": empty word is only valid in M1 mode");
}

Word involute(const Word& w) {
  std::u8string r(w.codes().rbegin(), w.codes().rend());
  for (char8_t& c : r) c ^= 1;
  return Word::from_codes(std::move(r));
}

Multidegree multidegree(const Word& w, std::size_t d) {
  Multidegree m(d);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int k = w[i].index();
    if (static_cast<std::size_t>(k) > d)
      throw PreconditionError("letter x" + std::to_string(k) + " exceeds d=" + std::to_string(d));
    ++m[k - 1];
  }
  return m;
}

Multidegree multidegree(const Word& w) { return multidegree(w, static_cast<std::size_t>(w.max_index())); }

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  const std::size_t n = w.size();
  const auto& c = w.codes();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = c[i] == c[i - period];
    if (periodic) return false;
  }
  return true;
}

namespace {

// Least rotation of `s` (as a doubled-string scan; n is small).
std::u8string least_rotation(const std::u8string& s) {
  const std::size_t n = s.size();
  std::u8string doubled = s + s;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (doubled.compare(i, n, doubled, best, n) < 0) best = i;
  return doubled.substr(best, n);
}

}  // namespace

Word class_rep(const Word& w) {
  require_nonempty(w, "class_rep");
  std::u8string a = least_rotation(w.codes());
  std::u8string b = least_rotation(involute(w).codes());
  return Word::from_codes(std::min(a, b));
}

bool is_class_rep(const Word& w) { return class_rep(w) == w; }

std::size_t class_size(const Word& w) {
  require_nonempty(w, "class_size");
  std::vector<std::u8string> all;
  Word t = involute(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    all.push_back(w.rotated(i).codes());
    all.push_back(t.rotated(i).codes());
  }
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

WordEnumerator::WordEnumerator(const Multidegree& delta, EnumerateOptions opts)
    : delta_(delta), opts_(std::move(opts)) {
  for (int e : delta_.entries())
    if (e < 0) throw PreconditionError("multidegree with negative entry");
  length_ = static_cast<std::size_t>(delta_.total());
  remaining_ = delta_.entries();
  literal_count_.assign(2 * delta_.size(), 0);
  if (length_ == 0) done_ = true;
}

bool WordEnumerator::admissible_prefix(Letter l) const {
  if (remaining_[static_cast<std::size_t>(l.index() - 1)] == 0) return false;
  if (opts_.per_literal_cap > 0 && literal_count_[l.code()] >= opts_.per_literal_cap) return false;
  if (opts_.follows && !current_.empty() && !opts_.follows(current_.back(), l)) return false;
  return true;
}

bool WordEnumerator::accept() const {
  if (opts_.follows && opts_.cyclic_follow && !opts_.follows(current_.back(), current_.front())) return false;
  if (opts_.primitive_only && !is_primitive(current_)) return false;
  if (opts_.classes_only && !is_class_rep(current_)) return false;
  return true;
}

// Extends current_ with the least admissible letters until full length.
// Returns false if some position has no admissible letter (caller backtracks).
bool WordEnumerator::descend() {
  const auto letters = static_cast<std::uint8_t>(2 * delta_.size());
  while (current_.size() < length_) {
    std::uint8_t code = 0;
    while (code < letters && !admissible_prefix(Letter::from_code(code))) ++code;
    if (code == letters) return false;
    Letter l = Letter::from_code(code);
    stack_.push_back(code);
    current_.push_back(l);
    --remaining_[static_cast<std::size_t>(l.index() - 1)];
    ++literal_count_[code];
  }
  return true;
}

bool WordEnumerator::next() {
  if (done_) return false;
  const auto letters = static_cast<std::uint8_t>(2 * delta_.size());
  bool need_backtrack = started_;
  started_ = true;
  while (true) {
    if (!need_backtrack) {
      if (descend()) {
        if (accept()) return true;
      }
    }
    need_backtrack = false;
    // Backtrack: bump the deepest position that has a larger admissible letter.
    bool advanced = false;
    while (!stack_.empty()) {
      std::uint8_t code = stack_.back();
      stack_.pop_back();
      Letter old = Letter::from_code(code);
      ++remaining_[static_cast<std::size_t>(old.index() - 1)];
      --literal_count_[code];
      current_ = current_.subword(0, current_.size() - 1);
      for (std::uint8_t c = code + 1; c < letters; ++c) {
        Letter l = Letter::from_code(c);
        if (admissible_prefix(l)) {
          stack_.push_back(c);
          current_.push_back(l);
          --remaining_[static_cast<std::size_t>(l.index() - 1)];
          ++literal_count_[c];
          advanced = true;
          break;
        }
      }
      if (advanced) break;
    }
    if (!advanced) {
      done_ = true;
      return false;
    }
  }
}

std::vector<Word> enumerate_words(const Multidegree& delta, const EnumerateOptions& opts) {
  if (delta.total() < 1) throw PreconditionError("enumerate_words requires |delta| >= 1");
  std::vector<Word> out;
  WordEnumerator e(delta, opts);
  while (e.next()) out.push_back(e.current());
  return out;
}

std::uint64_t word_count(const Multidegree& delta) {
  std::uint64_t count = 1;
  int n = 0;
  for (int e : delta.entries()) {
    for (int i = 1; i <= e; ++i) {
      ++n;
      count = count * static_cast<std::uint64_t>(n) / static_cast<std::uint64_t>(i);
    }
  }
  return count << n;
}

namespace {

std::size_t skip_space(const std::string& s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = skip_space(text, 0);
  bool expect_letter = true;
  while (i < text.size()) {
    if (text[i] == '*') {
      if (expect_letter) throw ParseError("unexpected '*'", i);
      expect_letter = true;
      i = skip_space(text, i + 1);
      continue;
    }
    if (text[i] != 'x') throw ParseError("expected letter", i);
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) throw ParseError("letter without index", i);
    int index = std::stoi(text.substr(i + 1, j - i - 1));
    if (index < 1) throw ParseError("letter index must be positive", i);
    bool transposed = false;
    if (j < text.size() && text[j] == '\'') {
      transposed = true;
      ++j;
    }
    int reps = 1;
    std::size_t k = skip_space(text, j);
    if (k < text.size() && text[k] == '^') {
      std::size_t m = skip_space(text, k + 1);
      std::size_t e = m;
      while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
      if (e == m) throw ParseError("expected exponent", m);
      reps = std::stoi(text.substr(m, e - m));
      j = e;
    }
    for (int r = 0; r < reps; ++r) w.push_back(Letter(index, transposed));
    expect_letter = false;
    i = skip_space(text, j);
  }
  if (expect_letter && !w.empty()) throw ParseError("dangling '*'", text.size());
  return w;
}

std::vector<Multidegree> sub_multidegrees(const Multidegree& delta) {
  std::vector<Multidegree> out;
  Multidegree m(delta.size());
  const std::size_t d = delta.size();
  while (true) {
    if (!m.is_zero()) out.push_back(m);
    std::size_t k = d;
    while (k-- > 0) {
      if (m[k] < delta[k]) {
        ++m[k];
        for (std::size_t j = k + 1; j < d; ++j) m[j] = 0;
        break;
      }
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<Multidegree> compositions(int total, std::size_t d) {
  if (total < 0 || d < 1) throw PreconditionError("compositions: invalid arguments");
  std::vector<Multidegree> out;
  Multidegree m(d);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k + 1 == d) {
      m[k] = left;
      out.push_back(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      m[k] = v;
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace a3d
