#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "hss/verifier.hpp"

using namespace hss;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("grassmannian lower sweep") {
  const auto r = verify_grassmannian_lower(6, 6, 2);
  CHECK(r.success);
  CHECK(r.violations.empty());
  CHECK(r.instances_checked == 21387);
  // 25 full rectangles plus the (2,1) witness in the 2x2 box.
  CHECK(r.equality_cases_found.size() == 26);
  CHECK(contains(r.equality_cases_found, "a=2 b=2 l=2 lambda=(2,1) q=1"));
  CHECK(contains(r.equality_cases_found, "a=2 b=3 l=5 lambda=(3,3) q=0"));
  // 30 l=0 instances live in the Hodge bucket, not the equality set.
  CHECK(std::count_if(r.notes.begin(), r.notes.end(), [](const std::string& n) {
          return n.rfind("l=0 equality", 0) == 0;
        }) == 30);
}

TEST_CASE("grassmannian upper sweep") {
  const auto r = verify_grassmannian_upper(6, 6, 2);
  CHECK(r.success);
  CHECK(r.violations.empty());
  CHECK(r.equality_cases_found.size() == 225);
  CHECK(contains(r.equality_cases_found, "a=2 b=2 l=2 lambda=(2,1) q=1"));
}

TEST_CASE("cn sweep") {
  const auto rs = verify_cn(8, 11, 2);
  REQUIRE(rs.size() == 2);
  const auto& lower = rs[0];
  const auto& upper = rs[1];
  CHECK(lower.proposition == "P3.5");
  CHECK(lower.success);
  CHECK(lower.violations.empty());
  CHECK(contains(lower.equality_cases_found, "n=4 l=5 x=C:[1,2,3,4] q=0"));
  CHECK(lower.equality_cases_found.size() == 6);  // one per n = 3..8
  CHECK(upper.proposition == "P3.6");
  CHECK(upper.success);
  CHECK(contains(upper.equality_cases_found, "n=5 l=2 x=C:[-1,-2,3,-4,-5] q=1"));
}

TEST_CASE("dn sweep") {
  const auto rs = verify_dn(7, 14, 2);
  REQUIRE(rs.size() == 2);
  const auto& lower = rs[0];
  const auto& upper = rs[1];
  CHECK(lower.proposition == "P3.8");
  CHECK(lower.success);
  CHECK(contains(lower.equality_cases_found, "n=5 l=8 x=D:[0,1,2,3,4] q=0"));
  CHECK(lower.equality_cases_found.size() == 3);  // l = 2(n-1) reachable for n = 5..7
  CHECK(upper.proposition == "P3.9");
  CHECK(upper.success);
  // Family 1 example: positives {2,3}, l = 4.
  CHECK(contains(upper.equality_cases_found, "n=5 l=4 x=D:[0,-1,2,3,-4] q=1"));
  // Family 2 example: (0,1,-2,3,-4) at l = 2.
  CHECK(contains(upper.equality_cases_found, "n=5 l=2 x=D:[0,1,-2,3,-4] q=2"));
}

TEST_CASE("prop 2.2 sweep over quadrics finds the middle family") {
  std::vector<HssSpace> spaces;
  for (int n = 2; n <= 6; ++n) spaces.push_back(describe_quadric(n));
  const auto r = verify_prop22(spaces, 4, 2);
  CHECK(r.success);
  CHECK(r.violations.empty());
  CHECK(contains(r.equality_cases_found, "space=B:3 p=2 q=1 l=1"));
  CHECK(contains(r.equality_cases_found, "space=B:4 p=3 q=1 l=2"));
  // Instances beyond the published four-case list are surfaced as notes.
  CHECK(contains(r.notes,
                 "equality beyond the published four-case list: space=B:3 p=2 q=1 l=1"));
  CHECK_FALSE(contains(r.notes,
                       "equality beyond the published four-case list: space=B:4 p=3 q=1 l=2"));
}

TEST_CASE("prop 2.2 sweep over the other families") {
  std::vector<HssSpace> spaces = {describe_grassmannian(2, 2), describe_grassmannian(2, 3),
                                  describe_grassmannian(3, 3), describe_lagrangian(3),
                                  describe_lagrangian(4), describe_spinor(5)};
  const auto r = verify_prop22(spaces, 2, 2);
  CHECK(r.success);
  CHECK(r.violations.empty());
  CHECK(contains(r.equality_cases_found, "space=A:2,2 p=3 q=1 l=2"));
}

TEST_CASE("cross-checks agree along the classical identifications") {
  const auto r = cross_check_isomorphisms(6, 2);
  CHECK(r.success);
  CHECK(r.violations.empty());
  CHECK(r.instances_checked > 0);
}

TEST_CASE("rank-one matrix fact at order 3") {
  const auto r = verify_rank1_matrix_fact(3, 0, 2);
  CHECK(r.success);
  CHECK(r.violations.empty());
  CHECK(r.instances_checked == 36);
}

TEST_CASE("sweeps are deterministic across worker counts") {
  const auto serial = verify_grassmannian_lower(4, 4, 2, 1);
  const auto parallel = verify_grassmannian_lower(4, 4, 2, 4);
  CHECK(serial.instances_checked == parallel.instances_checked);
  CHECK(serial.violations == parallel.violations);
  CHECK(serial.equality_cases_found == parallel.equality_cases_found);
  CHECK(serial.notes == parallel.notes);

  const auto cs = verify_cn(6, 8, 1), cp = verify_cn(6, 8, 3);
  CHECK(cs[0].equality_cases_found == cp[0].equality_cases_found);
  CHECK(cs[1].equality_cases_found == cp[1].equality_cases_found);
  CHECK(cs[0].instances_checked == cp[0].instances_checked);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(verify_grassmannian_lower(1, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_cn(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_dn(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(cross_check_isomorphisms(3), std::invalid_argument);
  CHECK_THROWS_AS(verify_rank1_matrix_fact(2, 10), std::invalid_argument);
}
