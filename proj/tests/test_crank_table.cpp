#include <doctest.h>

#include <random>

#include "sptcrank/crank_table.hpp"
#include "sptcrank/generating.hpp"

namespace gen = sptcrank::gen;
using sptcrank::QSeries;

TEST_CASE("table matches univariate rows") {
  const std::size_t order = 120;
  const auto table = gen::CrankTable::build(gen::Family::C5, 15, order);
  CHECK(table.max_m() == 15);
  for (int m = -15; m <= 15; ++m) CHECK(table.row(m) == gen::gen_SC5_m(m, order));
  CHECK(table.value(3, 10) == table.value(-3, 10));
  CHECK_THROWS_AS(table.value(16, 10), std::out_of_range);
  CHECK_THROWS_AS(table.value(0, order + 1), std::out_of_range);
}

TEST_CASE("support, equidistribution and marginals") {
  for (auto family : {gen::Family::C1, gen::Family::C5}) {
    const auto table = gen::CrankTable::build(family, 99, 100);
    CHECK(gen::check_support(table).passed);
    CHECK(gen::check_marginals(family, 150).passed);
  }
  CHECK(gen::check_equidistribution(200).passed);
}

TEST_CASE("residue classes partition the marginal") {
  const auto table = gen::CrankTable::build(gen::Family::C1, 60, 60);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const int modulus = 2 + static_cast<int>(rng() % 9);
    mpz_class sum = 0;
    for (int i = 0; i < modulus; ++i) sum += table.residue_class_sum(i, modulus, n);
    CHECK(sum == table.marginal(n));
  }
}

TEST_CASE("streamed rows match and arrive in order") {
  int expected = 0;
  gen::for_each_crank_row(gen::Family::C1, 12, 50, [&](int m, const QSeries& row) {
    CHECK(m == expected);
    CHECK(row == gen::gen_SC1_m(m, 50));
    ++expected;
  });
  CHECK(expected == 13);
}

TEST_CASE("positivity on a small range") {
  for (auto family : {gen::Family::C1, gen::Family::C5}) {
    const auto report = gen::positivity_sweep(family, 150);
    CHECK(report.negatives.empty());
    CHECK(report.entries_checked == 150 * 150);
  }
}
