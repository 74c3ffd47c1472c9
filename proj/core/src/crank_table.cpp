#include "sptcrank/crank_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "sptcrank/errors.hpp"

namespace sptcrank::gen {

namespace {

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Computes rows [first, first + out.size()) into `out`.
void build_rows(Family family, int first, std::size_t order, std::vector<QSeries>& out) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(out.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = gen_SC_m(family, first + static_cast<int>(i), order);
    }
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < out.size(); i += workers) {
        out[i] = gen_SC_m(family, first + static_cast<int>(i), order);
      }
    });
  }
}

void require_nonnegative(int max_m) {
  if (max_m < 0) throw InvalidArgument("crank table needs max_m >= 0");
}

}  // namespace

CrankTable CrankTable::build(Family family, int max_m, std::size_t order) {
  require_nonnegative(max_m);
  std::vector<QSeries> rows(static_cast<std::size_t>(max_m) + 1, QSeries(0));
  build_rows(family, 0, order, rows);
  return CrankTable(family, order, std::move(rows));
}

const QSeries& CrankTable::row(int m) const {
  const int am = std::abs(m);
  if (am > max_m()) throw std::out_of_range("crank table row " + std::to_string(m));
  return rows_[static_cast<std::size_t>(am)];
}

const mpz_class& CrankTable::value(int m, std::size_t n) const {
  if (n > order_) throw std::out_of_range("crank table column " + std::to_string(n));
  return row(m)[n];
}

mpz_class CrankTable::residue_class_sum(int i, int modulus, std::size_t n) const {
  if (modulus <= 0) throw InvalidArgument("modulus must be positive");
  const int target = ((i % modulus) + modulus) % modulus;
  mpz_class sum = 0;
  for (int m = -max_m(); m <= max_m(); ++m) {
    if (((m % modulus) + modulus) % modulus == target) sum += value(m, n);
  }
  return sum;
}

mpz_class CrankTable::marginal(std::size_t n) const {
  mpz_class sum = value(0, n);
  for (int m = 1; m <= max_m(); ++m) sum += 2 * value(m, n);
  return sum;
}

void for_each_crank_row(Family family, int max_m, std::size_t order,
                        const std::function<void(int, const QSeries&)>& visit) {
  require_nonnegative(max_m);
  const int block = static_cast<int>(std::max(8u, 4 * worker_count()));
  for (int first = 0; first <= max_m; first += block) {
    const int count = std::min(block, max_m - first + 1);
    std::vector<QSeries> rows(static_cast<std::size_t>(count), QSeries(0));
    build_rows(family, first, order, rows);
    for (int i = 0; i < count; ++i) visit(first + i, rows[static_cast<std::size_t>(i)]);
  }
}

CheckResult check_equidistribution(std::size_t order) {
  CheckResult result{.name = "N_C1(i,5,5k+3) equal for i = 0..4"};
  // class_sums[i][n] for n = 5k+3
  std::vector<std::vector<mpz_class>> class_sums(5, std::vector<mpz_class>(order + 1));
  const int max_m = order == 0 ? 0 : static_cast<int>(order) - 1;
  for_each_crank_row(Family::C1, max_m, order, [&](int m, const QSeries& row) {
    const int pos = m % 5;
    const int neg = (5 - pos) % 5;
    for (std::size_t n = 3; n <= order; n += 5) {
      class_sums[static_cast<std::size_t>(pos)][n] += row[n];
      if (m > 0) class_sums[static_cast<std::size_t>(neg)][n] += row[n];
    }
  });
  for (std::size_t n = 3; n <= order; n += 5) {
    ++result.checked;
    for (std::size_t i = 1; i < 5; ++i) {
      if (class_sums[i][n] != class_sums[0][n]) {
        result.passed = false;
        result.first_failure = n;
        result.detail = "class " + std::to_string(i) + " sum " + class_sums[i][n].get_str() +
                        " != class 0 sum " + class_sums[0][n].get_str() + " at n = " +
                        std::to_string(n);
        return result;
      }
    }
  }
  return result;
}

CheckResult check_marginals(Family family, std::size_t order) {
  CheckResult result{.name = std::string("sum_m N_") + family_name(family) + "(m,n) marginal"};
  std::vector<mpz_class> sums(order + 1);
  const int max_m = order == 0 ? 0 : static_cast<int>(order) - 1;
  for_each_crank_row(family, max_m, order, [&](int m, const QSeries& row) {
    for (std::size_t n = 0; n <= order; ++n) {
      if (m == 0) {
        sums[n] += row[n];
      } else {
        sums[n] += 2 * row[n];
      }
    }
  });
  QSeries expected = gen_spt_omega(order);
  if (family == Family::C5) {
    const QSeries spt = gen_spt(order / 2);
    std::vector<mpz_class> c = std::move(expected).release();
    for (std::size_t n = 0; n <= order; n += 2) c[n] -= spt[n / 2];
    expected = QSeries(std::move(c));
  }
  for (std::size_t n = 0; n <= order; ++n) {
    ++result.checked;
    if (sums[n] != expected[n]) {
      result.passed = false;
      result.first_failure = n;
      result.detail = "sum " + sums[n].get_str() + " != expected " + expected[n].get_str();
      return result;
    }
  }
  return result;
}

PositivityReport positivity_sweep(Family family, std::size_t order) {
  PositivityReport report{.family = family, .order = order};
  const int max_m = order == 0 ? 0 : static_cast<int>(order) - 1;
  for_each_crank_row(family, max_m, order, [&](int m, const QSeries& row) {
    for (std::size_t n = static_cast<std::size_t>(m) + 1; n <= order; ++n) {
      const std::size_t mirrors = (m == 0) ? 1 : 2;
      report.entries_checked += mirrors;
      if (sgn(row[n]) < 0) {
        report.negatives.push_back({m, n});
        if (m > 0) report.negatives.push_back({-m, n});
      }
    }
  });
  return report;
}

CheckResult check_support(const CrankTable& table) {
  CheckResult result{.name = "N_C(m,n) = 0 for |m| >= n"};
  for (int m = 0; m <= table.max_m(); ++m) {
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(m), table.order());
    for (std::size_t n = 0; n <= top; ++n) {
      ++result.checked;
      if (sgn(table.value(m, n)) != 0) {
        result.passed = false;
        result.first_failure = n;
        result.detail = "nonzero at m = " + std::to_string(m) + ", n = " + std::to_string(n);
        return result;
      }
    }
  }
  return result;
}

}  // namespace sptcrank::gen
