#include "mzv/regularization.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "mzv/error.hpp"

namespace mzv {

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  if (a.degree() < 0 || b.degree() < 0) return TPolynomial();
  const int n = a.degree() + b.degree();
  std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      // T^i/i! * T^j/j! = binom(i+j, i) T^{i+j}/(i+j)!
      double binom = 1.0;
      for (int t = 1; t <= i; ++t) binom = binom * (j + t) / t;
      out[static_cast<std::size_t>(i + j)] += binom * a.coeff(i) * b.coeff(j);
    }
  }
  return TPolynomial(std::move(out));
}

TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }

double evaluate(const TPolynomial& p, double t) {
  double acc = 0.0;
  double power = 1.0;  // t^j / j!
  for (int j = 0; j <= p.degree(); ++j) {
    acc += p.coeff(j) * power;
    power *= t / (j + 1);
  }
  return acc;
}

namespace {

template <class Key, class Value>
class Memo {
 public:
  bool find(const Key& key, Value& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& key, const Value& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

Memo<Index, RegPolynomial>& stuffle_memo() {
  static Memo<Index, RegPolynomial> memo;
  return memo;
}

Memo<Word, WordRegPolynomial>& shuffle_memo() {
  static Memo<Word, WordRegPolynomial> memo;
  return memo;
}

}  // namespace

RegPolynomial stuffle_reduce(const Index& k) {
  if (k.admissible()) return RegPolynomial::constant(FormalSum(k));
  RegPolynomial cached;
  if (stuffle_memo().find(k, cached)) return cached;

  // (h,1^{m-1}) * (1) = m (h,1^m) + terms with fewer trailing ones.
  const auto [head, m] = strip_trailing_ones(k);
  const Index shorter = head.concat(Index::ones(m - 1));
  FormalSum remainder = stuffle_monomials(shorter, Index{1});
  remainder.add(k, Rational(-m));

  RegPolynomial result = stuffle_reduce(shorter).times_t();
  for (const auto& [term, c] : remainder) {
    RegPolynomial part = stuffle_reduce(term);
    part.scale(c);
    result -= part;
  }
  result.scale(Rational(1, m));
  stuffle_memo().insert(k, result);
  return result;
}

RegPolynomial stuffle_reduce(const FormalSum& s) {
  RegPolynomial out;
  for (const auto& [k, c] : s) {
    RegPolynomial part = stuffle_reduce(k);
    part.scale(c);
    out += part;
  }
  return out;
}

RegPolynomial z_star_star(const Index& k) {
  if (k.empty()) return RegPolynomial::constant(FormalSum(Index()));
  return stuffle_reduce(star_expand(k));
}

WordRegPolynomial shuffle_reduce(const Word& w) {
  if (!w.empty() && w[0] != 'B') throw Error(ErrorKind::MalformedWord, "shuffle_reduce needs a word starting with B: " + w.str());
  if (w.convergent()) return WordRegPolynomial::constant(WordSum(w));
  WordRegPolynomial cached;
  if (shuffle_memo().find(w, cached)) return cached;

  const int m = w.trailing_b();
  const Word shorter = w.prefix(w.size() - 1);
  WordSum remainder = shuffle_monomials(shorter, Word("B"));
  remainder.add(w, Rational(-m));

  WordRegPolynomial result = shuffle_reduce(shorter).times_t();
  for (const auto& [term, c] : remainder) {
    WordRegPolynomial part = shuffle_reduce(term);
    part.scale(c);
    result -= part;
  }
  result.scale(Rational(1, m));
  shuffle_memo().insert(w, result);
  return result;
}

WordSum shuffle_regularized_constant(const Word& convergent, int m) {
  if (convergent.empty() || convergent.back() != 'A')
    throw Error(ErrorKind::MalformedWord, "expected a word ending with A: " + convergent.str());
  const Word head = convergent.prefix(convergent.size() - 1);
  WordSum inner = shuffle_monomials(head, Word(std::string(static_cast<std::size_t>(m), 'B')));
  WordSum out;
  const Rational sign(m % 2 == 0 ? 1 : -1);
  for (const auto& [w, c] : inner) out.add(w.appended('A'), c * sign);
  return out;
}

FormalSum expand_stuffle(const RegPolynomial& p) {
  FormalSum out;
  FormalSum power{Index()};
  Rational factorial(1);
  for (int j = 0; j <= p.degree(); ++j) {
    if (j > 0) {
      power = stuffle(power, FormalSum(Index{1}));
      factorial *= j;
    }
    out.add(stuffle(p.coeff(j), power), Rational(1) / factorial);
  }
  return out;
}

WordSum expand_shuffle(const WordRegPolynomial& p) {
  WordSum out;
  WordSum power{Word()};
  Rational factorial(1);
  for (int j = 0; j <= p.degree(); ++j) {
    if (j > 0) {
      power = shuffle(power, WordSum(Word("B")));
      factorial *= j;
    }
    out.add(shuffle(p.coeff(j), power), Rational(1) / factorial);
  }
  return out;
}

TPolynomial rho_transform(const TPolynomial& p, const PowerSeries& a, bool invert) {
  if (a.order() < p.degree())
    throw Error(ErrorKind::TruncationError, "rho needs the A-series through y^" + std::to_string(p.degree()));
  const PowerSeries series = invert ? reciprocal(a) : a;
  std::vector<double> out(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), 0.0);
  for (int j = 0; j <= p.degree(); ++j) {
    for (int i = 0; i <= j; ++i) out[static_cast<std::size_t>(j - i)] += series[static_cast<std::size_t>(i)] * p.coeff(j);
  }
  return TPolynomial(std::move(out));
}

TPolynomial t_substitute(const TPolynomial& p, double shift) {
  std::vector<double> out(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), 0.0);
  for (int i = 0; i <= p.degree(); ++i) {
    double power = 1.0;  // shift^{j-i}/(j-i)!
    for (int j = i; j <= p.degree(); ++j) {
      out[static_cast<std::size_t>(i)] += p.coeff(j) * power;
      power *= shift / (j - i + 1);
    }
  }
  return TPolynomial(std::move(out));
}

RegPolynomial t_substitute(const RegPolynomial& p, const Rational& shift) {
  std::vector<FormalSum> out(static_cast<std::size_t>(std::max(p.degree(), -1) + 1));
  for (int i = 0; i <= p.degree(); ++i) {
    Rational power(1);
    for (int j = i; j <= p.degree(); ++j) {
      out[static_cast<std::size_t>(i)].add(p.coeff(j), power);
      power *= shift;
      power /= (j - i + 1);
    }
  }
  return RegPolynomial(std::move(out));
}

TPolynomial evaluate_coefficients(const RegPolynomial& p, const std::function<double(const FormalSum&)>& value) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(value(c));
  return TPolynomial(std::move(out));
}

TPolynomial andipode_check(const Index& k, const std::function<double(const FormalSum&)>& classical_value) {
  const int r = k.depth();
  if (r == 0) return TPolynomial::constant(1.0);
  TPolynomial total;
  for (int j = 0; j <= r; ++j) {
    const auto split = static_cast<std::size_t>(j);
    TPolynomial star = evaluate_coefficients(z_star_star(k.slice(0, split)), classical_value);
    TPolynomial plain = evaluate_coefficients(stuffle_reduce(reverse(k.slice(split, static_cast<std::size_t>(r)))), classical_value);
    TPolynomial term = star * plain;
    if ((r - j) % 2 == 1) term.scale(-1.0);
    total += term;
  }
  return total;
}

namespace {

template <class Poly>
std::string dump_lines(const Poly& p) {
  std::ostringstream out;
  for (int j = 0; j <= p.degree(); ++j) out << "[" << format(p.coeff(j)) << "] T^" << j << "/" << j << "!\n";
  if (p.degree() < 0) out << "[0] T^0/0!\n";
  return out.str();
}

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string debug_dump(const RegPolynomial& p) { return dump_lines(p); }
std::string debug_dump(const WordRegPolynomial& p) { return dump_lines(p); }

std::string pretty(const RegPolynomial& p) {
  std::string out;
  std::vector<mpz_class> factorials{1};
  for (int j = 1; j <= p.degree(); ++j) factorials.push_back(factorials.back() * j);
  for (int j = p.degree(); j >= 0; --j) {
    for (const auto& [k, c] : p.coeff(j)) {
      Rational scalar = c / Rational(factorials[static_cast<std::size_t>(j)]);
      const bool negative = sgn(scalar) < 0;
      if (negative) scalar = -scalar;
      if (out.empty())
        out += negative ? "−" : "";
      else
        out += negative ? " − " : " + ";
      std::string tpart = j == 0 ? "" : (j == 1 ? "T" : "T" + superscript(j));
      if (k.empty() && j > 0 && scalar.get_num() == 1) {
        out += tpart;
        if (scalar.get_den() != 1) out += "/" + scalar.get_den().get_str();
        continue;
      }
      std::vector<std::string> factors;
      if (scalar != 1 || (k.empty() && j == 0)) factors.push_back(format_rational(scalar));
      if (!k.empty()) factors.push_back(k.str());
      if (!tpart.empty()) factors.push_back(tpart);
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "·" : "") + factors[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace mzv
