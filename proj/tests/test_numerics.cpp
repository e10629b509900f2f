#include <doctest.h>

#include <cmath>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

using namespace mzv;
using doctest::Approx;

// Frozen reference values (closed forms or independent high-precision sums).
namespace {
constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595942;
constexpr double kZeta4 = 1.0823232337111382;
constexpr double kLn2 = 0.6931471805599453;

Approx near(double v, double eps = 1e-12) { return Approx(v).epsilon(eps); }
}  // namespace

TEST_CASE("classical values") {
  CHECK(zeta_value(Index({2})) == near(kZeta2));
  CHECK(zeta_value(Index({3})) == near(kZeta3));
  CHECK(zeta_value(Index({10})) == near(1.0009945751278181));
  CHECK(zeta_value(Index({1, 2})) == near(kZeta3));
  CHECK(zeta_value(Index({1, 3})) == near(kZeta4 / 4));
  CHECK(zeta_value(Index({2, 2})) == near((kZeta2 * kZeta2 - kZeta4) / 2));
  CHECK(zeta_star_value(Index({1, 2})) == near(2 * kZeta3));
  CHECK_THROWS_AS(zeta_value(Index({2, 1})), Error);
}

TEST_CASE("word integrals") {
  CHECK(word_integral(Word("BA")) == near(kZeta2));
  CHECK(word_integral(Word("BBA")) == near(kZeta3));
  CHECK_THROWS_AS(word_integral(Word("AB")), Error);
}

TEST_CASE("Hurwitz values") {
  CHECK(hurwitz_zeta_value(Index({2}), 1.0) == near(kZeta2 - 1));
  CHECK(hurwitz_zeta_value(Index({2}), 0.0) == near(kZeta2));
  // sum_{n>=1} (n+1/2)^-2 = pi^2/2 - 4
  CHECK(hurwitz_zeta_value(Index({2}), 0.5) == near(M_PI * M_PI / 2 - 4));
}

TEST_CASE("digamma") {
  constexpr double gamma = 0.5772156649015329;
  CHECK(digamma_1px(0.0) == near(-gamma));
  CHECK(digamma_1px(1.0) == near(1 - gamma));
  CHECK(digamma_1px(0.5) == near(0.03648997397857652));
  CHECK(digamma_1px(0.3) == near(-0.16919088886679961, 1e-11));
}

TEST_CASE("polylogarithms") {
  CHECK(li(Index({1}), 0.5).value == near(kLn2, 1e-10));
  CHECK(li(Index({2}), 0.5).value == near(kZeta2 / 2 - kLn2 * kLn2 / 2, 1e-10));
  CHECK(li(Index({1, 2}), 0.5).value == near(0.09475300423012771, 1e-10));
  CHECK_THROWS_AS(li(Index({2}), 0.99), Error);
}

TEST_CASE("hat-zeta against direct sums") {
  CHECK(hatzeta(Index({1}), Index({1, 2}), 0.5).value == near(0.63033655811780, 1e-11));
  // hat-zeta at t = 1 is the classical value of the circled product.
  CHECK(hatzeta(Index({1}), Index({2}), 1.0).value == near(kZeta3));
}

TEST_CASE("Kawashima functions") {
  // F((1);x) = gamma + psi(1+x)
  CHECK(f_taylor(Index({1}), 0.5).value == near(2 - 2 * kLn2, 1e-10));
  CHECK(f_via_theorem(Index({1}), 0.5, 0.0) == near(2 - 2 * kLn2, 1e-10));
  CHECK(f_ones(1, 0.5).value == near(2 - 2 * kLn2, 1e-10));
  CHECK(f_taylor(Index({1, 2}), 0.0).value == Approx(0.0));
  CHECK(f_t(Index({2}), 0.3, 1.0).value == 0.0);
  for (double x : {-0.2, 0.3}) {
    const double taylor = f_taylor(Index({2, 1}), x).value;
    CHECK(f_via_theorem(Index({2, 1}), x, 1.7) == near(taylor, 1e-9));
    CHECK(f_t(Index({2, 1}), x, 0.0).value == near(taylor, 1e-9));
  }
  CHECK_THROWS_AS(f_taylor(Index({1}), 0.8), Error);
}

TEST_CASE("exact oracle at finite N") {
  // Rational and long-double versions agree.
  const Rational x(1, 3);
  const double exact = to_double(f_partial_oracle(Index({1, 2}), x, 12));
  CHECK(f_partial_oracle(Index({1, 2}), 1.0 / 3, 12) == near(exact, 1e-13));
  CHECK(f_partial_oracle(Index({1}), Rational(0), 5) == Rational(0));
}

TEST_CASE("Taylor coefficients match a binomial expansion") {
  // zeta(2) at shift x: sum_n (n+x)^-2 = sum_m (-1)^m (m+1) zeta(m+2) x^m.
  const TaylorCoefficients c = taylor_hurwitz_coeffs(Index({2}), 8);
  REQUIRE(c.values.size() == 9);
  for (int m = 0; m <= 8; ++m) {
    const double expected = (m % 2 == 0 ? 1.0 : -1.0) * (m + 1) * zeta_value(Index({m + 2}));
    CHECK(c.values[static_cast<std::size_t>(m)] == near(expected, 1e-11));
  }
  CHECK(c.max_disagreement < 1e-12);
  CHECK_THROWS_AS(taylor_hurwitz_coeffs(Index({2, 1}), 3), Error);
}

TEST_CASE("series helpers") {
  const PowerSeries e = exp_series(PowerSeries(std::vector<double>{0.0, 1.0, 0.0, 0.0}));
  CHECK(e[3] == near(1.0 / 6));
  const PowerSeries r = reciprocal(PowerSeries(std::vector<double>{1.0, -1.0, 0.0}));
  CHECK(r[2] == near(1.0));
  const PowerSeries a = a_series(3);
  CHECK(a[2] == near(kZeta2 / 2));
  CHECK(a[3] == near(-kZeta3 / 3));
}

TEST_CASE("generating-function polynomials") {
  const TPolynomial z = z_classical(Index({1, 1}));
  CHECK(z.coeff(0) == near(-kZeta2 / 2));
  CHECK(z.coeff(2) == near(1.0));
  const TPolynomial p = p_hurwitz(Index({1}), 0.0);
  CHECK(p.coeff(1) == near(1.0));
  CHECK(p.coeff(0) == Approx(0.0));
}
