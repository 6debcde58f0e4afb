#include <catch2/catch_amalgamated.hpp>

#include "hss/partitions.hpp"
#include "hss/resolutions.hpp"
#include "hss/spaces.hpp"

using namespace hss;

TEST_CASE("koszul subset sums") {
  const Resolution r = koszul({2, 3});
  REQUIRE(r.codim() == 2);
  CHECK(r.term(0) == std::vector<int>{0});
  CHECK(r.term(1) == std::vector<int>{2, 3});
  CHECK(r.term(2) == std::vector<int>{5});

  const Resolution h = koszul({7});
  CHECK(h.codim() == 1);
  CHECK(h.term(1) == std::vector<int>{7});

  const Resolution c = koszul({2, 2, 2});
  CHECK(c.term(1) == std::vector<int>{2, 2, 2});
  CHECK(c.term(2) == std::vector<int>{4, 4, 4});
  CHECK(c.term(3) == std::vector<int>{6});
}

TEST_CASE("koszul is order-independent and binomially sized") {
  const Resolution a = koszul({2, 3, 5}), b = koszul({5, 2, 3});
  for (int i = 0; i <= 3; ++i) CHECK(a.term(i) == b.term(i));
  for (int i = 0; i <= 3; ++i)
    CHECK(a.term(i).size() == detail::binomial(3, i));
}

TEST_CASE("shape validation") {
  const HssSpace q3 = describe_quadric(3);
  const auto rep = validate_short(koszul({2, 3}), q3);
  CHECK(rep.is_short);
  CHECK_FALSE(rep.has_linear);
  CHECK(rep.strict);

  const auto lin = validate_short(koszul({1}), describe_projective(3));
  CHECK(lin.has_linear);
  CHECK_FALSE(lin.strict);

  const auto notshort = validate_short(koszul({2, 2, 2}), q3);
  CHECK_FALSE(notshort.is_short);

  // Strictness holds exactly when every input degree is >= 2.
  CHECK(validate_short(koszul({2, 2}), q3).strict);
  CHECK_FALSE(validate_short(koszul({1, 3}), q3).strict);
}

TEST_CASE("euler rank check vanishes on koszul input") {
  CHECK(euler_rank_check(koszul({2, 3})));
  CHECK(euler_rank_check(koszul({5})));
  CHECK(euler_rank_check(koszul({2, 2, 2})));
  CHECK(euler_rank_check(koszul({2, 3, 4, 5})));
}

TEST_CASE("raw resolutions validate the degree floor") {
  const Resolution r = Resolution::from_twists({{2, 3}, {5}});
  CHECK(r.codim() == 2);
  CHECK_THROWS_AS(Resolution::from_twists({{2}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Resolution::from_twists({}), std::invalid_argument);
  CHECK_THROWS_AS(koszul({0}), std::invalid_argument);
  CHECK_THROWS_AS(koszul({}), std::invalid_argument);
}

TEST_CASE("resolution text forms") {
  CHECK(koszul({3, 2}).str() == "ci:2,3");
  CHECK(parse_resolution("ci:2,3").term(2) == std::vector<int>{5});
  const Resolution raw = parse_resolution("raw:[{2,3},{5}]");
  CHECK(raw.term(1) == std::vector<int>{2, 3});
  CHECK(raw.str() == "raw:[{2,3},{5}]");
  CHECK_THROWS_AS(parse_resolution("nope:1"), std::invalid_argument);
}
