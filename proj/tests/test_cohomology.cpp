#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "hss/cohomology.hpp"

using namespace hss;

namespace {

Nonvanishing status(const HssSpace& y, int p, int q, int l) {
  return nonvanishing(CohomologyQuery{y, p, q, l}, 0).status;
}

}  // namespace

TEST_CASE("named non-vanishing cases") {
  // G(2,4) boundary witness (2,1).
  const auto g22 = nonvanishing(make_query(describe_grassmannian(2, 2), 3, 1, 2));
  CHECK(g22.status == Nonvanishing::Nonzero);
  REQUIRE(g22.witness_count == 1);
  CHECK(g22.witnesses == std::vector<std::string>{"(2,1) in 2x2"});

  // Hodge diagonal on the quadric threefold.
  CHECK(status(describe_quadric(3), 1, 1, 0) == Nonvanishing::Nonzero);

  // Bott: sections of Omega^2(2) on P^3 need l > p.
  CHECK(status(describe_projective(3), 2, 0, 2) == Nonvanishing::Zero);
  CHECK(status(describe_projective(3), 2, 0, 3) == Nonvanishing::Nonzero);

  // All-negative D_5 sequence witnesses H^0(O(1)) != 0 on the spinor space.
  const auto d5 = nonvanishing(make_query(describe_spinor(5), 0, 0, 1));
  CHECK(d5.status == Nonvanishing::Nonzero);
  REQUIRE_FALSE(d5.witnesses.empty());
  CHECK(d5.witnesses.front() == "D:[0,-1,-2,-3,-4]");
}

TEST_CASE("witness cap truncates the list but not the count") {
  // Weight-2 partitions of the 2x2 box at l=0: (2) and (1,1).
  const HssSpace y = describe_grassmannian(2, 2);
  const auto full = nonvanishing(make_query(y, 2, 2, 0));
  CHECK(full.witness_count == 2);
  CHECK(full.witnesses.size() == 2);
  const auto capped = nonvanishing(make_query(y, 2, 2, 0), 1);
  CHECK(capped.witness_count == 2);
  CHECK(capped.witnesses.size() == 1);
}

TEST_CASE("serre_dual is an involution and preserves status") {
  const std::vector<HssSpace> spaces = {describe_projective(3), describe_quadric(4),
                                        describe_grassmannian(2, 3), describe_lagrangian(3),
                                        describe_spinor(5)};
  for (const HssSpace& y : spaces) {
    for (int p = 0; p <= y.dimension; ++p)
      for (int q = 0; q <= y.dimension; ++q)
        for (int l = -6; l <= 6; ++l) {
          const CohomologyQuery query{y, p, q, l};
          const CohomologyQuery dual = serre_dual(query);
          CHECK(serre_dual(dual).p == p);
          CHECK(serre_dual(dual).q == q);
          CHECK(serre_dual(dual).l == l);
          CHECK(status(y, p, q, l) == status(y, dual.p, dual.q, dual.l));
        }
  }
}

TEST_CASE("hodge diagonal at l=0") {
  const std::vector<HssSpace> spaces = {describe_projective(4), describe_quadric(5),
                                        describe_grassmannian(2, 3), describe_lagrangian(3),
                                        describe_spinor(5), describe_eiii(), describe_evii()};
  for (const HssSpace& y : spaces)
    for (int p = 0; p <= std::min(y.dimension, 8); ++p)
      for (int q = 0; q <= std::min(y.dimension, 8); ++q)
        CHECK((status(y, p, q, 0) == Nonvanishing::Nonzero) == (p == q));
}

TEST_CASE("grassmannian duality in (a,b)") {
  const HssSpace g23 = describe_grassmannian(2, 3), g32 = describe_grassmannian(3, 2);
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q)
      for (int l = -7; l <= 7; ++l) CHECK(status(g23, p, q, l) == status(g32, p, q, l));
}

TEST_CASE("upper bound: l>0, q>0 nonzero forces l+q <= p") {
  const std::vector<HssSpace> spaces = {describe_quadric(4), describe_grassmannian(2, 3),
                                        describe_lagrangian(3), describe_spinor(5)};
  for (const HssSpace& y : spaces)
    for (int p = 0; p <= y.dimension; ++p)
      for (int q = 1; q <= y.dimension; ++q)
        for (int l = 1; l <= y.index + 2; ++l)
          if (status(y, p, q, l) == Nonvanishing::Nonzero) CHECK(l + q <= p);
}

TEST_CASE("exceptional spaces answer only the Hodge diagonal") {
  for (const HssSpace& y : {describe_eiii(), describe_evii()}) {
    CHECK(status(y, 2, 2, 0) == Nonvanishing::Nonzero);
    CHECK(status(y, 2, 1, 0) == Nonvanishing::Zero);
    CHECK(status(y, 1, 0, 3) == Nonvanishing::Unsupported);
    CHECK(status(y, 1, 2, -3) == Nonvanishing::Unsupported);
  }
}

TEST_CASE("lower-bound checker") {
  // Boundary witness on G(2,4): equality in the Q^4 case.
  const auto r1 = check_lower_bound(make_query(describe_grassmannian(2, 2), 3, 1, 2));
  CHECK(r1.holds);
  CHECK(r1.is_equality);
  CHECK(r1.classified_case == "Q4-exception");

  const auto r2 = check_lower_bound(make_query(describe_quadric(4), 2, 2, 0));
  CHECK(r2.is_equality);
  CHECK(r2.classified_case == "quadric-hodge (l=0, p=q)");

  // p=q=0, l=1 is non-vanishing but sits strictly above the threshold.
  const auto r3 = check_lower_bound(make_query(describe_projective(2), 0, 0, 1));
  CHECK(r3.holds);
  CHECK_FALSE(r3.is_equality);
  const auto r4 = check_lower_bound(make_query(describe_projective(2), 0, 0, 0));
  CHECK(r4.is_equality);
  CHECK(r4.classified_case == "zero-weight (p=q=0, l=0)");

  // Top form.
  const auto r5 = check_lower_bound(make_query(describe_grassmannian(2, 3), 6, 0, 5));
  CHECK(r5.is_equality);
  CHECK(r5.classified_case == "top-form (p=dim, q=0, l=index)");

  // The quadric middle family beyond Q^4: H^1(Q^3, Omega^2(1)).
  const auto r6 = check_lower_bound(make_query(describe_quadric(3), 2, 1, 1));
  CHECK(r6.is_equality);
  CHECK(r6.classified_case == "quadric-middle (q=dim-p, l=2p-dim)");

  // Hodge diagonal on P^n sits strictly below the threshold.
  const auto r7 = check_lower_bound(make_query(describe_projective(3), 2, 2, 0));
  CHECK_FALSE(r7.holds);

  CHECK_THROWS_AS(check_lower_bound(make_query(describe_quadric(3), 1, 3, 0)),
                  std::invalid_argument);  // q = dim
  CHECK_THROWS_AS(check_lower_bound(make_query(describe_quadric(3), 1, 2, 5)),
                  std::invalid_argument);  // vanishing group
}

TEST_CASE("query text round-trip") {
  const CohomologyQuery q = parse_query("A:2,3 p=4 q=1 l=3");
  CHECK(q.space.key() == "A:2,3");
  CHECK(q.p == 4);
  CHECK(q.q == 1);
  CHECK(q.l == 3);
  CHECK(q.text() == "A:2,3 p=4 q=1 l=3");
  CHECK_THROWS_AS(parse_query("A:2,3 p=4"), std::invalid_argument);
  CHECK_THROWS_AS(make_query(describe_quadric(3), 4, 0, 0), std::invalid_argument);
}
