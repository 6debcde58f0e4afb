#include <catch2/catch_amalgamated.hpp>

#include "hss/spaces.hpp"

using namespace hss;

TEST_CASE("catalog invariants per series") {
  const HssSpace g23 = describe_grassmannian(2, 3);
  CHECK(g23.dimension == 6);
  CHECK(g23.index == 5);

  const HssSpace evii = describe_evii();
  CHECK(evii.dimension == 27);
  CHECK(evii.index == 18);

  const HssSpace eiii = describe_eiii();
  CHECK(eiii.dimension == 16);
  CHECK(eiii.index == 12);

  const HssSpace q3 = describe_quadric(3);
  CHECK(q3.dimension == 3);
  CHECK(q3.index == 3);

  CHECK(describe_projective(3).index == 4);
  CHECK(describe_lagrangian(3).dimension == 6);
  CHECK(describe_lagrangian(3).index == 4);
  CHECK(describe_spinor(5).dimension == 10);
  CHECK(describe_spinor(5).index == 8);
}

TEST_CASE("parameter floors") {
  CHECK_THROWS_AS(describe_projective(0), std::invalid_argument);
  CHECK_THROWS_AS(describe_quadric(1), std::invalid_argument);
  CHECK_THROWS_AS(describe_grassmannian(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(describe_lagrangian(2), std::invalid_argument);
  CHECK_THROWS_AS(describe_spinor(4), std::invalid_argument);
}

TEST_CASE("index bounds across the catalog") {
  std::vector<HssSpace> grid;
  for (int n = 1; n <= 9; ++n) grid.push_back(describe_projective(n));
  for (int n = 2; n <= 9; ++n) grid.push_back(describe_quadric(n));
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) grid.push_back(describe_grassmannian(a, b));
  for (int n = 3; n <= 7; ++n) grid.push_back(describe_lagrangian(n));
  for (int n = 5; n <= 9; ++n) grid.push_back(describe_spinor(n));
  grid.push_back(describe_eiii());
  grid.push_back(describe_evii());

  for (const HssSpace& y : grid) {
    CHECK(y.index <= y.dimension + 1);
    CHECK((y.index == y.dimension + 1) == (y.series == Series::Projective));
    if (y.series != Series::Projective) {
      // index/dimension in (0,1], hitting 1 exactly on the quadric-like spaces
      // (the quadric series and G(2,4) ~ Q^4).
      CHECK(y.index <= y.dimension);
      const bool is_q4_model = y.series == Series::Grassmannian && y.a == 2 && y.b == 2;
      CHECK(y.quadric_like() == (y.series == Series::Quadric || is_q4_model));
    }
  }
}

TEST_CASE("slope thresholds") {
  CHECK(slope_threshold(describe_grassmannian(2, 2), 3) == Rational(3));
  CHECK(slope_threshold(describe_lagrangian(3), 6) == Rational(4));
  CHECK(slope_threshold(describe_grassmannian(2, 3), 1) == Rational(5, 6));
  for (const HssSpace& y : {describe_quadric(5), describe_spinor(6), describe_evii()}) {
    CHECK(slope_threshold(y, 0) == Rational(0));
    CHECK(slope_threshold(y, y.dimension) == Rational(y.index));
  }
  CHECK_THROWS_AS(slope_threshold(describe_quadric(3), 4), std::invalid_argument);
}

TEST_CASE("keys round-trip") {
  const std::vector<std::string> keys = {"P:3", "B:3", "A:2,3", "C:4", "D:5", "E3", "E7"};
  for (const auto& k : keys) CHECK(parse_space_key(k).key() == k);
  CHECK(parse_space_key("Q:3").key() == "B:3");  // alias
  CHECK_THROWS_AS(parse_space_key("X:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space_key("A:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space_key("A:2,3x"), std::invalid_argument);
}

TEST_CASE("Q2 is flagged") {
  CHECK(describe_quadric(2).reducible_picard());
  CHECK_FALSE(describe_quadric(3).reducible_picard());
}
