#include <catch2/catch_amalgamated.hpp>

#include "hss/rational.hpp"

using hss::Rational;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(-6, 8) == Rational(-3, 4));
  CHECK(Rational(6, -8) == Rational(-3, 4));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK((Rational(1, 2) - Rational(1, 3)) == Rational(1, 6));
  CHECK((Rational(8) / Rational(3)) == Rational(8, 3));
  CHECK(-Rational(8, 3) == Rational(-8, 3));
}

TEST_CASE("rational comparisons cross-multiply") {
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(5, 6) > Rational(4, 5));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(1, 3) <= Rational(2, 6));
}

TEST_CASE("rational strings are exact, never decimal") {
  CHECK(Rational(8, 3).str() == "8/3");
  CHECK(Rational(8).str() == "8");
  CHECK(Rational(16, 2).str() == "8");
  CHECK(Rational(-8, 3).str() == "-8/3");
  CHECK(Rational(0, 5).str() == "0");
}

TEST_CASE("rational rejects zero denominators") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}
