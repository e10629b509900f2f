#include "mzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mzv/error.hpp"

namespace mzv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyIndex: return "EmptyIndex";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::LastPartTooSmall: return "LastPartTooSmall";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TruncationError: return "TruncationError";
    case ErrorKind::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void require_non_empty(const Index& k, const char* op) {
  if (k.empty()) throw Error(ErrorKind::EmptyIndex, std::string(op) + " needs a non-empty index");
}

}  // namespace

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorKind::ParseError, "index parts must be positive");
  }
}

Index Index::ones(int count) { return Index(std::vector<int>(static_cast<std::size_t>(count), 1)); }

int Index::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Index Index::slice(std::size_t begin, std::size_t end) const {
  Index out;
  out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(begin),
                    parts_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

Index Index::appended(int part) const {
  Index out = *this;
  out.parts_.push_back(part);
  return out;
}

Index Index::concat(const Index& tail) const {
  Index out = *this;
  out.parts_.insert(out.parts_.end(), tail.parts_.begin(), tail.parts_.end());
  return out;
}

std::string Index::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Index Index::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error(ErrorKind::ParseError, "expected an index like \"(1,2)\", got \"" + std::string(text) + "\"");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  if (body.empty()) return Index();
  while (true) {
    std::size_t comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1)
      throw Error(ErrorKind::ParseError, "bad index part \"" + std::string(token) + "\"");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Index(std::move(parts));
}

Classification classify(const Index& k) { return {k.weight(), k.depth(), k.admissible()}; }

Index reverse(const Index& k) {
  std::vector<int> parts(k.parts().rbegin(), k.parts().rend());
  return Index(std::move(parts));
}

Index k_plus(const Index& k) {
  require_non_empty(k, "k_plus");
  Index head = k.slice(0, static_cast<std::size_t>(k.depth() - 1));
  return head.appended(k.back() + 1);
}

TrailingOnes strip_trailing_ones(const Index& k) {
  auto parts = k.parts();
  std::size_t end = parts.size();
  while (end > 0 && parts[end - 1] == 1) --end;
  return {k.slice(0, end), static_cast<int>(parts.size() - end)};
}

Index hoffman_dual(const Index& k) {
  require_non_empty(k, "hoffman_dual");
  // Write k as 1 ? 1 ? ... ? 1 with '+' inside a part and ',' between parts;
  // the dual swaps the two separators.
  std::vector<int> out;
  int run = 1;
  for (int i = 0; i < k.depth(); ++i) {
    for (int j = 1; j < k[static_cast<std::size_t>(i)]; ++j) {
      out.push_back(run);  // a '+' becomes ','
      run = 1;
    }
    if (i + 1 < k.depth()) ++run;  // a ',' becomes '+'
  }
  out.push_back(run);
  return Index(std::move(out));
}

Index duality_dual(const Index& k) {
  require_non_empty(k, "duality_dual");
  if (!k.admissible()) throw Error(ErrorKind::NotAdmissible, "duality_dual of " + k.str());
  return index_of_word(dual_word(word_of_index(k)));
}

Index minus_last(const Index& k) {
  if (k.empty() || k.back() < 2)
    throw Error(ErrorKind::LastPartTooSmall, "minus_last needs last part >= 2, got " + k.str());
  Index head = k.slice(0, static_cast<std::size_t>(k.depth() - 1));
  return head.appended(k.back() - 1);
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'A' && c != 'B') throw Error(ErrorKind::MalformedWord, "letters must be A or B: " + letters_);
  }
}

Word Word::appended(char letter) const {
  Word out = *this;
  out.letters_.push_back(letter);
  return out;
}

int Word::trailing_b() const noexcept {
  int n = 0;
  for (auto it = letters_.rbegin(); it != letters_.rend() && *it == 'B'; ++it) ++n;
  return n;
}

Word word_of_index(const Index& k) {
  std::string letters;
  letters.reserve(static_cast<std::size_t>(k.weight()));
  for (int part : k.parts()) {
    letters.push_back('B');
    letters.append(static_cast<std::size_t>(part - 1), 'A');
  }
  return Word(std::move(letters));
}

Index index_of_word(const Word& w) {
  if (w.empty()) return Index();
  if (w[0] != 'B') throw Error(ErrorKind::MalformedWord, "index words start with B: " + w.str());
  std::vector<int> parts;
  for (char c : w.letters()) {
    if (c == 'B')
      parts.push_back(1);
    else
      ++parts.back();
  }
  return Index(std::move(parts));
}

Word dual_word(const Word& w) {
  std::string letters(w.letters().rbegin(), w.letters().rend());
  for (char& c : letters) c = (c == 'A') ? 'B' : 'A';
  return Word(std::move(letters));
}

std::vector<Index> compositions(int weight) {
  std::vector<Index> out;
  if (weight <= 0) return out;
  // Bit i of the mask set means a ',' after the (i+1)-th one.
  const unsigned total = 1u << (weight - 1);
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < weight - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> indices_up_to(int max_weight) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w) {
    auto ws = compositions(w);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

std::vector<Index> admissible_up_to(int max_weight) {
  std::vector<Index> out;
  for (auto& k : indices_up_to(max_weight)) {
    if (k.admissible()) out.push_back(k);
  }
  return out;
}

std::size_t IndexHash::operator()(const Index& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int p : k.parts()) {
    h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h ^ static_cast<std::size_t>(k.depth());
}

}  // namespace mzv
