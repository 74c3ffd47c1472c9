#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sptcrank/check.hpp"
#include "sptcrank/generating.hpp"

namespace sptcrank::gen {

/// Dense table of N_C(m, n) for |m| <= max_m, 0 <= n <= order. Only m >= 0
/// is stored; negative m mirrors.
class CrankTable {
 public:
  /// Builds rows m = 0..max_m, in parallel when hardware threads allow.
  static CrankTable build(Family family, int max_m, std::size_t order);

  Family family() const noexcept { return family_; }
  int max_m() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  std::size_t order() const noexcept { return order_; }

  /// Throws std::out_of_range for |m| > max_m or n > order.
  const mpz_class& value(int m, std::size_t n) const;
  const QSeries& row(int m) const;

  /// Sum of N_C(m, n) over m = i mod modulus, |m| <= max_m.
  mpz_class residue_class_sum(int i, int modulus, std::size_t n) const;
  /// Sum of N_C(m, n) over |m| <= max_m.
  mpz_class marginal(std::size_t n) const;

 private:
  CrankTable(Family family, std::size_t order, std::vector<QSeries> rows)
      : family_(family), order_(order), rows_(std::move(rows)) {}

  Family family_;
  std::size_t order_;
  std::vector<QSeries> rows_;
};

/// Calls `visit(m, row)` for m = 0..max_m in increasing order without
/// retaining the rows. Rows are computed in parallel blocks.
void for_each_crank_row(Family family, int max_m, std::size_t order,
                        const std::function<void(int, const QSeries&)>& visit);

/// The five classes N_C1(i, 5, n) agree for every n = 5k+3 <= order.
CheckResult check_equidistribution(std::size_t order);

/// sum_m N_C(m, n) equals spt_omega(n) (C1) or spt_omega(n) - spt(n/2) (C5)
/// for every n <= order.
CheckResult check_marginals(Family family, std::size_t order);

struct NegativeEntry {
  int m;
  std::size_t n;
};

struct PositivityReport {
  Family family;
  std::size_t order = 0;
  std::size_t entries_checked = 0;
  std::vector<NegativeEntry> negatives;
};

/// Flags every negative N_C(m, n) with |m| < n <= order.
PositivityReport positivity_sweep(Family family, std::size_t order);

/// Every N_C(m, n) with |m| >= n is zero.
CheckResult check_support(const CrankTable& table);

}  // namespace sptcrank::gen
