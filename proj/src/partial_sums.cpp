#include <cmath>

#include "mzv/numerics.hpp"

namespace mzv {

namespace {

Rational rational_power(const Rational& base, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// acc[i] holds the sum over chains of length i whose largest element is below
// the current n (strict) or at most n (star).
template <class Value, class Term>
Value nested_sum(const Index& k, long N, bool star, Term term) {
  const int r = k.depth();
  std::vector<Value> acc(static_cast<std::size_t>(r + 1), Value(0));
  acc[0] = Value(1);
  for (long n = 1; n < N; ++n) {
    if (star) {
      for (int i = 1; i <= r; ++i) acc[static_cast<std::size_t>(i)] += acc[static_cast<std::size_t>(i - 1)] * term(n, k[static_cast<std::size_t>(i - 1)]);
    } else {
      for (int i = r; i >= 1; --i) acc[static_cast<std::size_t>(i)] += acc[static_cast<std::size_t>(i - 1)] * term(n, k[static_cast<std::size_t>(i - 1)]);
    }
  }
  return acc[static_cast<std::size_t>(r)];
}

template <class F>
Rational linear(const FormalSum& s, F f) {
  Rational out(0);
  for (const auto& [k, c] : s) out += c * f(k);
  return out;
}

}  // namespace

Rational zeta_partial(const Index& k, long N) {
  return nested_sum<Rational>(k, N, false, [](long n, int e) -> Rational { return Rational(1) / rational_power(Rational(n), e); });
}

Rational zeta_star_partial(const Index& k, long N) {
  return nested_sum<Rational>(k, N, true, [](long n, int e) -> Rational { return Rational(1) / rational_power(Rational(n), e); });
}

Rational hurwitz_partial(const Index& k, const Rational& x, long N) {
  return nested_sum<Rational>(k, N, false, [&x](long n, int e) -> Rational { return Rational(1) / rational_power(Rational(n) + x, e); });
}

Rational zeta_partial(const FormalSum& s, long N) {
  return linear(s, [N](const Index& k) { return zeta_partial(k, N); });
}

Rational zeta_star_partial(const FormalSum& s, long N) {
  return linear(s, [N](const Index& k) { return zeta_star_partial(k, N); });
}

Rational hurwitz_partial(const FormalSum& s, const Rational& x, long N) {
  return linear(s, [N, &x](const Index& k) { return hurwitz_partial(k, x, N); });
}

double zeta_partial_real(const Index& k, double x, long N) {
  const long double shift = x;
  return static_cast<double>(nested_sum<long double>(k, N, false, [shift](long n, int e) { return std::pow(static_cast<long double>(n) + shift, -e); }));
}

double zeta_star_partial_real(const Index& k, long N) {
  return static_cast<double>(nested_sum<long double>(k, N, true, [](long n, int e) { return std::pow(static_cast<long double>(n), -e); }));
}

}  // namespace mzv
