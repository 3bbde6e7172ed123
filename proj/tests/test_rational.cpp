#include <doctest.h>

#include "nlgames/rational.hpp"

using nlgames::BigInt;
using nlgames::ExactProb;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction reduces to canonical form") {
  ExactProb p(6, 16);
  CHECK(p.num() == 3);
  CHECK(p.den() == 8);
  CHECK(p == ExactProb(3, 8));
  CHECK(ExactProb(0, 4) == ExactProb::zero());
  CHECK(ExactProb(5, 5) == ExactProb::one());
}

TEST_CASE("values outside [0, 1] are rejected") {
  CHECK_THROWS_AS(ExactProb(3, 2), std::domain_error);
  CHECK_THROWS_AS(ExactProb(-1, 2), std::domain_error);
  CHECK_THROWS_AS(ExactProb(1, 0), std::domain_error);
  CHECK_THROWS_AS(ExactProb(1, -2), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  ExactProb half(1, 2);
  ExactProb third(1, 3);
  CHECK(half * third == ExactProb(1, 6));
  CHECK(half + third == ExactProb(5, 6));
  CHECK(half - third == ExactProb(1, 6));
  CHECK(third / half == ExactProb(2, 3));
  CHECK_THROWS_AS(half / ExactProb::zero(), std::domain_error);
  // A sum leaving [0, 1] is not a probability.
  CHECK_THROWS_AS(half + ExactProb(2, 3), std::domain_error);

  // No rounding creeps in across a chain of operations.
  ExactProb p(1, 3);
  ExactProb q = p;
  for (int i = 0; i < 20; ++i) q = q * ExactProb(7, 9) / ExactProb(7, 9);
  CHECK(q == p);
}

TEST_CASE("ordering") {
  CHECK(ExactProb(1, 3) < ExactProb(1, 2));
  CHECK(ExactProb(184756, 1048576) < ExactProb(12155, 65536));
  CHECK(ExactProb(1, 2) <= ExactProb(2, 4));
}

TEST_CASE("rendering") {
  CHECK(ExactProb(6, 16).fraction_string() == "3/8");
  CHECK(ExactProb::zero().fraction_string() == "0");
  CHECK(ExactProb::one().fraction_string() == "1");
  CHECK(ExactProb(3, 8).decimal_string() == "0.375");
  CHECK(ExactProb(184756, 1048576).decimal_string() == "0.176197052002");
  CHECK(ExactProb(1, 3).decimal_string(4) == "0.3333");
}

TEST_CASE("big integers survive") {
  // 2^100 as a denominator stays exact.
  BigInt den = BigInt(1) << 100;
  ExactProb tiny(1, den);
  CHECK(tiny.den() == den);
  CHECK((tiny * ExactProb(1, 2)).den() == den * 2);
}

TEST_SUITE_END();
