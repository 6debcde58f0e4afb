#include <algorithm>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "hss/partitions.hpp"

using hss::Partition;
using hss::PartitionStream;

namespace {

std::vector<int> sorted_hooks(const Partition& lam) {
  auto h = lam.hooks();
  std::sort(h.begin(), h.end());
  return h;
}

Partition random_partition(std::mt19937& rng, int a, int b) {
  std::vector<int> parts;
  std::uniform_int_distribution<int> rows(0, a);
  int prev = b;
  const int k = rows(rng);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> part(0, prev);
    int v = part(rng);
    if (v == 0) break;
    parts.push_back(v);
    prev = v;
  }
  return Partition(parts, a, b);
}

}  // namespace

TEST_CASE("hook numbers") {
  CHECK(sorted_hooks(Partition({2, 1}, 2, 2)) == std::vector<int>{1, 1, 3});
  CHECK(sorted_hooks(Partition({}, 3, 3)).empty());
  // Full rectangle: max hook is a+b-1.
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto h = sorted_hooks(Partition(std::vector<int>(a, b), a, b));
      CHECK(h.back() == a + b - 1);
    }
}

TEST_CASE("admissibility and degree") {
  const Partition lam({2, 1}, 2, 2);
  CHECK(lam.is_admissible(2));
  CHECK_FALSE(lam.is_admissible(3));
  CHECK(lam.is_admissible(0));  // hooks are positive
  CHECK(lam.degree(2) == 1);
  CHECK(lam.degree(0) == lam.weight());
  // Full rectangle at l = a+b: admissible with degree 0.
  const Partition rect({3, 3}, 2, 3);
  CHECK(rect.is_admissible(5));
  CHECK(rect.degree(5) == 0);
}

TEST_CASE("hook multiset and admissibility are transpose-invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
    const Partition lam = random_partition(rng, a, b);
    const Partition t = lam.transpose();
    CHECK(t.box_a() == lam.box_b());
    CHECK(sorted_hooks(t) == sorted_hooks(lam));
    CHECK(static_cast<int>(lam.hooks().size()) == lam.weight());
    for (int l = 0; l <= a + b + 1; ++l) {
      CHECK(lam.is_admissible(l) == t.is_admissible(l));
      CHECK(lam.degree(l) == t.degree(l));
      CHECK(lam.degree(l) <= lam.weight());
      if (l >= a + b) {
        CHECK(lam.is_admissible(l));
        CHECK(lam.degree(l) == 0);
      }
    }
    CHECK(t.transpose() == lam);
  }
}

TEST_CASE("transpose examples") {
  CHECK(Partition({2, 1}, 2, 2).transpose() == Partition({2, 1}, 2, 2));
  CHECK(Partition({3}, 1, 3).transpose() == Partition({1, 1, 1}, 3, 1));
  CHECK(Partition({3, 3}, 2, 3).transpose() == Partition({2, 2, 2}, 3, 2));
}

TEST_CASE("enumeration counts and order") {
  CHECK(PartitionStream::count(2, 2) == 6);
  CHECK(PartitionStream::count(1, 3) == 4);
  CHECK(PartitionStream::count(3, 3) == 20);
  CHECK(PartitionStream::count(0, 4) == 1);

  // Colex order of padded part vectors for the 2x2 box.
  std::vector<std::string> order;
  for (PartitionStream s(2, 2); !s.done(); s.next()) order.push_back(s.current().str());
  CHECK(order == std::vector<std::string>{"() in 2x2", "(1) in 2x2", "(2) in 2x2",
                                          "(1,1) in 2x2", "(2,1) in 2x2", "(2,2) in 2x2"});

  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      std::set<std::string> seen;
      std::uint64_t n = 0;
      for (PartitionStream s(a, b); !s.done(); s.next(), ++n) seen.insert(s.current().str());
      CHECK(n == PartitionStream::count(a, b));
      CHECK(seen.size() == n);
    }
}

TEST_CASE("seek agrees with linear iteration") {
  for (int a : {2, 3, 4})
    for (int b : {2, 3, 5}) {
      PartitionStream linear(a, b);
      for (std::uint64_t r = 0; r < PartitionStream::count(a, b); ++r, linear.next()) {
        PartitionStream seeked(a, b);
        seeked.seek(r);
        REQUIRE_FALSE(seeked.done());
        CHECK(seeked.current() == linear.current());
      }
      PartitionStream past(a, b);
      past.seek(PartitionStream::count(a, b));
      CHECK(past.done());
    }
}

TEST_CASE("ascending increments") {
  // (3,1) in a 3-row box reads ascending as (0,1,3): increments (0,1,2).
  CHECK(Partition({3, 1}, 3, 4).ascending_increments() == std::vector<int>{0, 1, 2});
  CHECK(Partition({}, 2, 2).ascending_increments() == std::vector<int>{0, 0});
}

TEST_CASE("box validation") {
  CHECK_THROWS_AS(Partition({3}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 1}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}, 1, 3), std::invalid_argument);
  CHECK(Partition({2, 1, 0, 0}, 2, 2).parts() == std::vector<int>{2, 1});
}
