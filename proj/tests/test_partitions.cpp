#include <doctest.h>

#include <vector>

#include "sptcrank/errors.hpp"
#include "sptcrank/partitions.hpp"

namespace oracle = sptcrank::oracle;

TEST_CASE("enumeration order and counts") {
  std::vector<std::vector<int>> seen;
  for (const auto& p : oracle::enumerate(4)) seen.push_back(p.parts);
  const std::vector<std::vector<int>> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(seen == expected);

  std::size_t ones = 0;
  for (const auto& p : oracle::enumerate(1)) {
    CHECK(p.parts == std::vector<int>{1});
    ++ones;
  }
  CHECK(ones == 1);

  std::size_t empties = 0;
  for (const auto& p : oracle::enumerate(0)) {
    CHECK(p.parts.empty());
    ++empties;
  }
  CHECK(empties == 1);

  // p(n) from OEIS A000041.
  CHECK(oracle::partition_count(10) == 42);
  CHECK(oracle::partition_count(40) == 37338);
}

TEST_CASE("every yielded partition is valid and distinct") {
  std::vector<std::vector<int>> all;
  for (const auto& p : oracle::enumerate(12)) {
    int sum = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      CHECK(p.parts[i] > 0);
      if (i > 0) CHECK(p.parts[i] <= p.parts[i - 1]);
      sum += p.parts[i];
    }
    CHECK(sum == 12);
    if (!all.empty()) CHECK(p.parts < all.back());
    all.push_back(p.parts);
  }
  CHECK(all.size() == 77);
}

TEST_CASE("cap handling") {
  CHECK_THROWS_AS(oracle::enumerate(71), sptcrank::CapExceeded);
  CHECK_NOTHROW(oracle::enumerate(75, 80));
  CHECK_THROWS_AS(oracle::p_omega_oracle(100), sptcrank::CapExceeded);
  CHECK_THROWS_AS(oracle::enumerate(-1), sptcrank::InvalidArgument);
}

TEST_CASE("omega statistics for small n") {
  CHECK(oracle::p_omega_oracle(1) == 1);
  CHECK(oracle::p_omega_oracle(2) == 2);
  CHECK(oracle::p_omega_oracle(3) == 3);
  CHECK(oracle::spt_omega_oracle(1) == 1);
  CHECK(oracle::spt_omega_oracle(3) == 5);
  CHECK(oracle::spt_omega_oracle(3) % 5 == 0);
  CHECK(oracle::p_omega_oracle(0) == 0);
  CHECK(oracle::spt_omega_oracle(0) == 0);

  // [3,1] fails: 3 is odd and not below 2.
  oracle::Partition p{{3, 1}, 4};
  CHECK_FALSE(p.is_omega());
  oracle::Partition q{{4, 3, 2}, 9};
  CHECK(q.is_omega());
}

TEST_CASE("spt and rank statistics") {
  CHECK(oracle::spt_oracle(1) == 1);
  CHECK(oracle::spt_oracle(2) == 3);
  CHECK(oracle::spt_oracle(4) == 10);
  CHECK(oracle::rank_count_oracle(0, 1) == 1);
  CHECK(oracle::rank_moment2_oracle(1) == 0);
  CHECK(oracle::rank_moment2_oracle(2) == 2);

  std::uint64_t total = 0;
  for (int m = -4; m <= 4; ++m) total += oracle::rank_count_oracle(m, 4);
  CHECK(total == 5);
}

TEST_CASE("rank symmetry and totals") {
  for (int n = 1; n <= 20; ++n) {
    const auto stats = oracle::oracle_stats(n);
    std::uint64_t total = 0;
    for (const auto& [m, count] : stats.rank_counts) {
      total += count;
      const auto mirror = stats.rank_counts.find(-m);
      REQUIRE(mirror != stats.rank_counts.end());
      CHECK(mirror->second == count);
    }
    CHECK(total == stats.partitions);
    CHECK(stats.rank_moment2 % 2 == 0);
    CHECK(stats.spt_omega >= stats.p_omega);
    CHECK(stats.p_omega >= 1);
  }
  for (int n = 21; n <= 30; ++n) {
    const auto stats = oracle::oracle_stats(n);
    std::uint64_t total = 0;
    for (const auto& [m, count] : stats.rank_counts) total += count;
    CHECK(total == stats.partitions);
  }
}
