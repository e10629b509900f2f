#include <doctest.h>

#include "mzv/algebra.hpp"
#include "mzv/error.hpp"
#include "mzv/numerics.hpp"

using namespace mzv;

namespace {

FormalSum fs(std::initializer_list<int> parts) { return FormalSum(Index(parts)); }

}  // namespace

TEST_CASE("stuffle of single parts") {
  const FormalSum expected = fs({1, 2}) + fs({2, 1}) + fs({3});
  CHECK(stuffle(fs({1}), fs({2})) == expected);
  const FormalSum bar = fs({1, 2}) + fs({2, 1}) - fs({3});
  CHECK(bar_stuffle(fs({1}), fs({2})) == bar);
}

TEST_CASE("stuffle is commutative and associative at low weight") {
  const auto ks = indices_up_to(3);
  for (const Index& a : ks)
    for (const Index& b : ks) {
      CHECK(stuffle(FormalSum(a), FormalSum(b)) == stuffle(FormalSum(b), FormalSum(a)));
      CHECK(bar_stuffle(FormalSum(a), FormalSum(b)) == bar_stuffle(FormalSum(b), FormalSum(a)));
    }
  for (const Index& a : indices_up_to(2))
    for (const Index& b : indices_up_to(2))
      for (const Index& c : indices_up_to(2)) {
        CHECK(stuffle(stuffle(FormalSum(a), FormalSum(b)), FormalSum(c)) ==
              stuffle(FormalSum(a), stuffle(FormalSum(b), FormalSum(c))));
      }
}

TEST_CASE("empty index is the unit") {
  const FormalSum one(Index{});
  CHECK(stuffle(one, fs({2, 1})) == fs({2, 1}));
  CHECK(stuffle_power(fs({1}), 0) == one);
}

TEST_CASE("shuffle is commutative and associative") {
  const std::vector<Word> ws{Word("A"), Word("B"), Word("BA"), Word("AB"), Word("BBA")};
  for (const Word& a : ws)
    for (const Word& b : ws) {
      CHECK(shuffle(WordSum(a), WordSum(b)) == shuffle(WordSum(b), WordSum(a)));
      for (const Word& c : ws)
        CHECK(shuffle(shuffle(WordSum(a), WordSum(b)), WordSum(c)) == shuffle(WordSum(a), shuffle(WordSum(b), WordSum(c))));
    }
  WordSum expected(Word("AB"));
  expected.add(Word("BA"), Rational(1));
  CHECK(shuffle(WordSum(Word("A")), WordSum(Word("B"))) == expected);
  CHECK(shuffle_power(WordSum(Word("B")), 3) == WordSum(Word("BBB"), Rational(6)));
}

TEST_CASE("star expansion matches star partial sums") {
  CHECK(star_expand(Index({1, 2})) == fs({1, 2}) + fs({3}));
  CHECK(star_expand(Index({1, 1, 1})).size() == 4);
  CHECK_THROWS_AS(star_expand(Index{}), Error);
  for (const Index& k : indices_up_to(5)) {
    for (long N : {1L, 4L, 9L}) CHECK(zeta_star_partial(k, N) == zeta_partial(star_expand(k), N));
  }
}

TEST_CASE("circled ast") {
  CHECK(circled_ast(fs({2}), fs({3})) == fs({5}));
  CHECK(circled_ast(fs({1, 2}), fs({3})) == fs({1, 5}));
  CHECK(circled_ast(fs({1, 2}), fs({1, 1})) == fs({1, 1, 3}) + fs({1, 1, 3}) + fs({2, 3}));
  CHECK_THROWS_AS(circled_ast(FormalSum(Index{}), fs({1})), Error);
}

TEST_CASE("stuffle is multiplicative on partial sums") {
  const auto ks = indices_up_to(3);
  for (const Index& a : ks)
    for (const Index& b : ks) {
      CHECK(zeta_partial(stuffle(FormalSum(a), FormalSum(b)), 7) == zeta_partial(a, 7) * zeta_partial(b, 7));
    }
}

TEST_CASE("format") {
  CHECK(format(FormalSum()) == "0");
  const std::string s = format(fs({1, 2}) - FormalSum(Index({3}), Rational(1, 2)));
  CHECK(s.find("(1,2)") != std::string::npos);
  CHECK(s.find("1/2") != std::string::npos);
}
