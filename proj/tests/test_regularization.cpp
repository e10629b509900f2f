#include <doctest.h>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"
#include "mzv/regularization.hpp"

using namespace mzv;

TEST_CASE("shuffle regularization examples") {
  const WordRegPolynomial bb = shuffle_reduce(Word("BB"));
  CHECK(bb.degree() == 2);
  CHECK(bb.coeff(2) == WordSum(Word("")));
  CHECK(bb.coeff(1).zero());
  CHECK(bb.coeff(0).zero());

  // BAB = BA*T - 2 BBA
  const WordRegPolynomial bab = shuffle_reduce(Word("BAB"));
  CHECK(bab.degree() == 1);
  CHECK(bab.coeff(1) == WordSum(Word("BA")));
  CHECK(bab.coeff(0) == WordSum(Word("BBA"), Rational(-2)));
}

TEST_CASE("shuffle regularization round trip") {
  for (const Index& k : indices_up_to(5)) {
    const Word w = word_of_index(k);
    CHECK(expand_shuffle(shuffle_reduce(w)) == WordSum(w));
  }
}

TEST_CASE("stuffle regularization round trip") {
  for (const Index& k : indices_up_to(5)) CHECK(expand_stuffle(stuffle_reduce(k)) == FormalSum(k));
  const RegPolynomial one = stuffle_reduce(Index({1}));
  CHECK(one.degree() == 1);
  CHECK(one.coeff(1) == FormalSum(Index{}));
  // (1,1) -> T^2/2 - (2)/2
  const RegPolynomial ones = stuffle_reduce(Index({1, 1}));
  CHECK(ones.coeff(2) == FormalSum(Index{}));
  CHECK(ones.coeff(0) == FormalSum(Index({2}), Rational(-1, 2)));
}

TEST_CASE("admissible indices regularize to themselves") {
  for (const Index& k : admissible_up_to(5)) CHECK(stuffle_reduce(k) == RegPolynomial::constant(FormalSum(k)));
}

TEST_CASE("closed-form regularized constant agrees with the full reduction") {
  for (const Index& k : admissible_up_to(4)) {
    Word w = word_of_index(k);
    for (int m = 0; m <= 3; ++m) {
      CHECK(shuffle_regularized_constant(word_of_index(k), m) == shuffle_reduce(w).coeff(0));
      w = w.appended('B');
    }
  }
}

TEST_CASE("rho transform round trip") {
  const PowerSeries a = a_series(6);
  const TPolynomial p(std::vector<double>{0.3, -1.0, 2.0, 0.5});
  const TPolynomial back = rho_transform(rho_transform(p, a, false), a, true);
  REQUIRE(back.degree() == 3);
  for (int j = 0; j <= 3; ++j) CHECK(back.coeff(j) == doctest::Approx(p.coeff(j)).epsilon(1e-13));
  // rho(T) = T, rho(T^2/2) = T^2/2 + zeta(2)/2
  const TPolynomial sq = rho_transform(TPolynomial(std::vector<double>{0.0, 0.0, 1.0}), a, false);
  CHECK(sq.coeff(0) == doctest::Approx(1.6449340668482264 / 2).epsilon(1e-13));
  CHECK(sq.coeff(1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(rho_transform(TPolynomial(std::vector<double>(9, 1.0)), a, false), Error);
}

TEST_CASE("T substitution") {
  const TPolynomial p(std::vector<double>{1.0, 2.0, 2.0});  // 1 + 2T + T^2
  const TPolynomial q = t_substitute(p, -1.0);               // T^2
  CHECK(q.coeff(0) == doctest::Approx(0.0));
  CHECK(q.coeff(1) == doctest::Approx(0.0));
  CHECK(evaluate(q, 3.0) == doctest::Approx(9.0));
}

TEST_CASE("pretty printing") { CHECK(pretty(stuffle_reduce(Index({1, 1}))) == "T²/2 − 1/2·(2)"); }
