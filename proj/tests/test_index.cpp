#include <doctest.h>

#include "mzv/error.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

using namespace mzv;

TEST_CASE("parse and print") {
  CHECK(Index::parse("(1,2,3)") == Index({1, 2, 3}));
  CHECK(Index::parse("()").empty());
  CHECK(Index({2, 1}).str() == "(2,1)");
  CHECK_THROWS_AS(Index::parse("(1,0)"), Error);
  CHECK_THROWS_AS(Index::parse("1,2)"), Error);
}

TEST_CASE("classification") {
  const auto c = classify(Index({1, 1, 3}));
  CHECK(c.weight == 5);
  CHECK(c.depth == 3);
  CHECK(c.admissible);
  CHECK_FALSE(Index({3, 1}).admissible());
  CHECK(Index().admissible());
}

TEST_CASE("simple transforms") {
  CHECK(reverse(Index({1, 2, 3})) == Index({3, 2, 1}));
  CHECK(minus_last(Index({1, 3})) == Index({1, 2}));
  const auto [core, m] = strip_trailing_ones(Index({2, 3, 1, 1}));
  CHECK(core == Index({2, 3}));
  CHECK(m == 2);
  CHECK(strip_trailing_ones(Index({1, 1})).core.empty());
}

TEST_CASE("words") {
  CHECK(word_of_index(Index({1, 2})).str() == "BBA");
  CHECK(index_of_word(Word("BABBA")) == Index({2, 1, 2}));
  CHECK(dual_word(Word("BBA")).str() == "BAA");
  CHECK_THROWS_AS(index_of_word(Word("AB")), Error);
}

TEST_CASE("dualities are involutions") {
  for (const Index& k : indices_up_to(7)) {
    CHECK(hoffman_dual(hoffman_dual(k)) == k);
    CHECK(hoffman_dual(k).weight() == k.weight());
    CHECK(index_of_word(word_of_index(k)) == k);
  }
  for (const Index& k : admissible_up_to(7)) {
    CHECK(duality_dual(duality_dual(k)) == k);
    CHECK(duality_dual(k).admissible());
  }
  CHECK(duality_dual(Index({1, 2})) == Index({3}));
  CHECK(hoffman_dual(Index({3})) == Index({1, 1, 1}));
}

TEST_CASE("compositions") {
  CHECK(compositions(5).size() == 16);
  CHECK(indices_up_to(4).size() == 15);
  CHECK(admissible_up_to(4).size() == 7);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(format_rational(parse_rational("-10/4")) == "-5/2");
  CHECK(format_rational(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}
