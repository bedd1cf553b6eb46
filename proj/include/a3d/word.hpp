#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "a3d/errors.hpp"

namespace a3d {

/// A generator symbol x_k or its transpose x_k^T.
///
/// Letters are encoded as 2(k-1) + t, which realizes the global order
/// x1 < x1' < x2 < x2' < ... directly on the code.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, bool transposed)
      : code_(static_cast<std::uint8_t>(2 * (index - 1) + (transposed ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int index() const { return code_ / 2 + 1; }
  constexpr bool transposed() const { return (code_ & 1) != 0; }
  constexpr std::uint8_t code() const { return code_; }
  constexpr Letter transpose() const { return from_code(code_ ^ 1); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t code_ = 0;
};

/// Per-index degree vector; entry k-1 pools x_k and x_k^T.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::size_t d) : entries_(d, 0) {}
  Multidegree(std::initializer_list<int> entries);
  explicit Multidegree(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  int& operator[](std::size_t k) { return entries_[k]; }
  const std::vector<int>& entries() const { return entries_; }

  int total() const;
  bool is_zero() const { return total() == 0; }
  /// Slot-wise comparison; sizes must agree.
  bool fits_in(const Multidegree& bound) const;

  Multidegree operator+(const Multidegree& other) const;
  Multidegree operator-(const Multidegree& other) const;
  Multidegree operator*(int factor) const;
  Multidegree resized(std::size_t d) const;

  std::string to_string() const;  // "3,1"

  auto operator<=>(const Multidegree&) const = default;

 private:
  std::vector<int> entries_;
};

/// A finite product of letters. The empty word is the unity of M_1 and is
/// rejected by the operations that live in M (see `require_nonempty`).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(const std::vector<Letter>& letters);

  static Word from_codes(std::u8string codes);
  static Word letter(int index, bool transposed = false) { return Word{Letter(index, transposed)}; }

  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter operator[](std::size_t i) const { return Letter::from_code(static_cast<std::uint8_t>(codes_[i])); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }
  const std::u8string& codes() const { return codes_; }

  Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);
  Word& push_back(Letter l);
  Word pow(int k) const;
  Word subword(std::size_t pos, std::size_t len) const;
  /// Cyclic rotation starting at position `shift`.
  Word rotated(std::size_t shift) const;

  int max_index() const;
  int degree_of(Letter l) const;

  std::string to_string() const;  // grammar form: x1^2*x2'

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::u8string codes_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const Multidegree& m);

void require_nonempty(const Word& w, const char* what);

/// (a_1 ... a_p)^T = a_p^T ... a_1^T.
Word involute(const Word& w);

/// Multidegree of w in an ambient with d indices (d >= w.max_index()).
Multidegree multidegree(const Word& w, std::size_t d);
Multidegree multidegree(const Word& w);

bool is_primitive(const Word& w);

/// Least word among all rotations of w and of involute(w).
Word class_rep(const Word& w);
bool is_class_rep(const Word& w);

/// Size of the ~-class of w (number of distinct rotations of w and w^T).
std::size_t class_size(const Word& w);

struct EnumerateOptions {
  /// Largest number of occurrences of any single letter (x_k and x_k^T are
  /// counted separately). Zero means unbounded.
  int per_literal_cap = 0;
  /// Constraint on consecutive letters; checked cyclically when
  /// `cyclic_follow` is set.
  std::function<bool(Letter, Letter)> follows;
  bool cyclic_follow = true;
  bool classes_only = false;
  bool primitive_only = false;
};

/// Lazily enumerates, in lexicographic order, the words of a fixed
/// multidegree that satisfy the options.
class WordEnumerator {
 public:
  explicit WordEnumerator(const Multidegree& delta, EnumerateOptions opts = {});

  /// Advances to the next word; returns false when exhausted.
  bool next();
  const Word& current() const { return current_; }

 private:
  bool admissible_prefix(Letter l) const;
  bool accept() const;
  bool descend();

  Multidegree delta_;
  EnumerateOptions opts_;
  std::vector<int> remaining_;       // per index
  std::vector<int> literal_count_;   // per letter code
  std::vector<std::uint8_t> stack_;  // candidate code per position
  Word current_;
  std::size_t length_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// All nonzero multidegrees m with m <= delta slot-wise, in lexicographic order.
std::vector<Multidegree> sub_multidegrees(const Multidegree& delta);
/// All multidegrees with d entries summing to `total`.
std::vector<Multidegree> compositions(int total, std::size_t d);

std::vector<Word> enumerate_words(const Multidegree& delta, const EnumerateOptions& opts = {});

/// Number of words of multidegree delta: multinomial(|delta|; delta) * 2^|delta|.
std::uint64_t word_count(const Multidegree& delta);

/// Parses a bare word: letters `x3`, `x3'`, juxtaposition with `*` or
/// whitespace, `^k` repetition.
Word parse_word(const std::string& text);

}  // namespace a3d

template <>
struct std::hash<a3d::Word> {
  std::size_t operator()(const a3d::Word& w) const noexcept { return std::hash<std::u8string>{}(w.codes()); }
};

template <>
struct std::hash<a3d::Multidegree> {
  std::size_t operator()(const a3d::Multidegree& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : m.entries()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};
