#pragma once

#include <map>
#include <string>
#include <utility>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// Finite Q-linear combination of keys with exact coefficients. No stored
/// coefficient is ever zero, and iteration follows the key order.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Rational>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key) { add(key, Rational(1)); }  // NOLINT: monomials convert implicitly
  LinearCombination(const Key& key, const Rational& c) { add(key, c); }

  void add(const Key& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Rational& scale = Rational(1)) {
    if (sgn(scale) == 0) return;
    for (const auto& [key, c] : other.terms_) add(key, c * scale);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Rational(-1));
    return *this;
  }
  LinearCombination& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

using FormalSum = LinearCombination<Index>;
using WordSum = LinearCombination<Word>;

/// "c1*(…) + c2*(…)"; zero prints as "0".
std::string format(const FormalSum& s);
std::string format(const WordSum& s);

}  // namespace mzv
