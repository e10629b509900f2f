#include "mzv/algebra.hpp"

#include <type_traits>
#include <vector>

#include "mzv/error.hpp"

namespace mzv {

namespace {

FormalSum append_part(const FormalSum& s, int part, const Rational& scale = Rational(1)) {
  FormalSum out;
  for (const auto& [k, c] : s) out.add(k.appended(part), c * scale);
  return out;
}

WordSum append_letter(const WordSum& s, char letter) {
  WordSum out;
  for (const auto& [w, c] : s) out.add(w.appended(letter), c);
  return out;
}

template <class T>
std::string format_terms(const LinearCombination<T>& s) {
  if (s.zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : s) {
    Rational mag = c;
    if (sgn(c) < 0) mag = -c;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    out += format_rational(mag);
    out += "*";
    if constexpr (std::is_same_v<T, Index>)
      out += key.str();
    else
      out += key.empty() ? std::string("1") : key.str();
  }
  return out;
}

}  // namespace

std::string format(const FormalSum& s) { return format_terms(s); }
std::string format(const WordSum& s) { return format_terms(s); }

FormalSum star_expand(const Index& l) {
  if (l.empty()) throw Error(ErrorKind::EmptyIndex, "star_expand needs a non-empty index");
  const int gaps = l.depth() - 1;
  FormalSum out;
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<int> parts{l[0]};
    for (int i = 0; i < gaps; ++i) {
      int next = l[static_cast<std::size_t>(i + 1)];
      if (mask & (1u << i))
        parts.back() += next;
      else
        parts.push_back(next);
    }
    out.add(Index(std::move(parts)), Rational(1));
  }
  return out;
}

FormalSum stuffle_monomials(const Index& a, const Index& b, int merge_sign) {
  const std::size_t r = static_cast<std::size_t>(a.depth());
  const std::size_t s = static_cast<std::size_t>(b.depth());
  const Rational merge(merge_sign);
  // row[j] holds a[0..i) * b[0..j).
  std::vector<FormalSum> prev(s + 1), row(s + 1);
  for (std::size_t j = 0; j <= s; ++j) prev[j] = FormalSum(b.slice(0, j));
  for (std::size_t i = 1; i <= r; ++i) {
    const int ai = a[i - 1];
    row[0] = FormalSum(a.slice(0, i));
    for (std::size_t j = 1; j <= s; ++j) {
      const int bj = b[j - 1];
      FormalSum cell = append_part(prev[j], ai);
      for (const auto& [k, c] : row[j - 1]) cell.add(k.appended(bj), c);
      for (const auto& [k, c] : prev[j - 1]) cell.add(k.appended(ai + bj), c * merge);
      row[j] = std::move(cell);
    }
    std::swap(prev, row);
  }
  return prev[s];
}

namespace {

FormalSum bilinear(const FormalSum& a, const FormalSum& b, int merge_sign) {
  FormalSum out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add(stuffle_monomials(ka, kb, merge_sign), ca * cb);
  }
  return out;
}

}  // namespace

FormalSum stuffle(const FormalSum& a, const FormalSum& b) { return bilinear(a, b, 1); }
FormalSum bar_stuffle(const FormalSum& a, const FormalSum& b) { return bilinear(a, b, -1); }

FormalSum circled_ast(const FormalSum& k, const FormalSum& l) {
  FormalSum out;
  for (const auto& [ki, ci] : k) {
    if (ki.empty()) throw Error(ErrorKind::EmptyIndex, "circled_ast needs non-empty indices");
    const Index kh = ki.slice(0, static_cast<std::size_t>(ki.depth() - 1));
    for (const auto& [li, cj] : l) {
      if (li.empty()) throw Error(ErrorKind::EmptyIndex, "circled_ast needs non-empty indices");
      const Index lh = li.slice(0, static_cast<std::size_t>(li.depth() - 1));
      out.add(append_part(stuffle_monomials(kh, lh), ki.back() + li.back()), ci * cj);
    }
  }
  return out;
}

WordSum shuffle_monomials(const Word& a, const Word& b) {
  const std::size_t r = a.size();
  const std::size_t s = b.size();
  std::vector<WordSum> prev(s + 1), row(s + 1);
  for (std::size_t j = 0; j <= s; ++j) prev[j] = WordSum(b.prefix(j));
  for (std::size_t i = 1; i <= r; ++i) {
    row[0] = WordSum(a.prefix(i));
    for (std::size_t j = 1; j <= s; ++j) {
      WordSum cell = append_letter(prev[j], a[i - 1]);
      for (const auto& [w, c] : row[j - 1]) cell.add(w.appended(b[j - 1]), c);
      row[j] = std::move(cell);
    }
    std::swap(prev, row);
  }
  return prev[s];
}

WordSum shuffle(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) out.add(shuffle_monomials(wa, wb), ca * cb);
  }
  return out;
}

FormalSum map_linear(const std::function<FormalSum(const Index&)>& f, const FormalSum& s) {
  FormalSum out;
  for (const auto& [k, c] : s) out.add(f(k), c);
  return out;
}

FormalSum stuffle_power(const FormalSum& a, int n) {
  FormalSum out{Index()};
  for (int i = 0; i < n; ++i) out = stuffle(out, a);
  return out;
}

WordSum shuffle_power(const WordSum& a, int n) {
  WordSum out{Word()};
  for (int i = 0; i < n; ++i) out = shuffle(out, a);
  return out;
}

}  // namespace mzv
