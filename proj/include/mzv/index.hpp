#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// A finite sequence of positive integers (k_1, ..., k_r). The empty index is
/// a regular value. Ordering is lexicographic on the parts, a proper prefix
/// sorting first, which is what FormalSum uses as its key order.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> parts);
  explicit Index(std::vector<int> parts);

  static Index ones(int count);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  bool empty() const noexcept { return parts_.empty(); }
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool admissible() const noexcept { return parts_.empty() || parts_.back() > 1; }

  /// Parts [begin, end).
  Index slice(std::size_t begin, std::size_t end) const;
  Index appended(int part) const;
  Index concat(const Index& tail) const;

  friend auto operator<=>(const Index&, const Index&) = default;
  friend bool operator==(const Index&, const Index&) = default;

  /// "(1,2)"; the empty index is "()".
  std::string str() const;
  static Index parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

struct Classification {
  int weight;
  int depth;
  bool admissible;
};

Classification classify(const Index& k);
Index reverse(const Index& k);
Index k_plus(const Index& k);

struct TrailingOnes {
  Index core;
  int count;
};
TrailingOnes strip_trailing_ones(const Index& k);

Index hoffman_dual(const Index& k);
Index duality_dual(const Index& k);
Index minus_last(const Index& k);

/// Two-letter word for iterated integrals. 'A' is du/u, 'B' is du/(1-u); the
/// leftmost letter is the innermost integration variable.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  char back() const { return letters_.back(); }

  Word appended(char letter) const;
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }

  /// Ends with A (or is empty): the integral from 0 to 1 converges.
  bool convergent() const noexcept { return letters_.empty() || letters_.back() == 'A'; }
  int trailing_b() const noexcept;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  const std::string& str() const noexcept { return letters_; }

 private:
  std::string letters_;
};

Word word_of_index(const Index& k);
Index index_of_word(const Word& w);
/// Reverse the letters and swap A <-> B.
Word dual_word(const Word& w);

/// Every index of the given weight (all compositions), in canonical order.
std::vector<Index> compositions(int weight);
/// Every non-empty index with weight in [1, max_weight].
std::vector<Index> indices_up_to(int max_weight);
std::vector<Index> admissible_up_to(int max_weight);

struct IndexHash {
  std::size_t operator()(const Index& k) const noexcept;
};

}  // namespace mzv
