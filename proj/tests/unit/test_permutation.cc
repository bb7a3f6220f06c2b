#include "doctest.h"

#include "halftrans/error.hpp"
#include "halftrans/permutation.hpp"

using namespace halftrans;

TEST_CASE("products compose left to right")
{
  auto p = Permutation::from_cycles(4, {{0, 1}});
  auto q = Permutation::from_cycles(4, {{1, 2}});
  auto pq = p * q;
  CHECK(pq[0] == 2); // 0 -> 1 -> 2
  CHECK(pq[1] == 0);
  CHECK(pq.str() == "(1,3,2)");
}

TEST_CASE("inverse, power and order")
{
  auto c = Permutation::from_cycles(7, {{0, 1, 2}, {3, 4, 5, 6}});
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.order() == 12);
  CHECK(c.pow(12).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(!c.pow(6).is_identity());
}

TEST_CASE("conjugation relabels cycles")
{
  auto x = Permutation::from_cycles(5, {{0, 1, 2}});
  auto g = Permutation::from_cycles(5, {{2, 3}});
  CHECK(x.conjugate(g) == Permutation::from_cycles(5, {{0, 1, 3}}));
}

TEST_CASE("cycle parsing")
{
  CHECK(parse_permutation("(1,2)(3,4,5)", 6).str() == "(1,2)(3,4,5)");
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK_THROWS_AS(parse_permutation("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,2)(2,3)", 3), ParseError);
}
