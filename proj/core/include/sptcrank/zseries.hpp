#pragma once

#include <cstddef>
#include <vector>

#include "sptcrank/series.hpp"

namespace sptcrank {

/// Laurent polynomial in z with QSeries coefficients, over the window
/// z^zmin .. z^zmax. Every row shares one truncation order.
class ZQSeries {
 public:
  ZQSeries(int zmin, int zmax, std::size_t order);
  /// rows[i] is the coefficient of z^(zmin + i); all rows must share an order.
  ZQSeries(int zmin, std::vector<QSeries> rows);

  int zmin() const noexcept { return zmin_; }
  int zmax() const noexcept { return zmin_ + static_cast<int>(rows_.size()) - 1; }
  std::size_t order() const noexcept { return order_; }

  bool contains(int m) const noexcept { return m >= zmin() && m <= zmax(); }
  /// Throws std::out_of_range outside the window.
  const QSeries& row(int m) const;
  /// Coefficient of z^m q^n; zero outside the stored window.
  mpz_class coeff(int m, std::size_t n) const;

  /// True when row(m) == row(-m) for every m with both rows stored, and rows
  /// without a mirror partner are zero.
  bool is_symmetric() const;

  /// Sum over the window at z = 1.
  QSeries at_z_one() const;

  friend bool operator==(const ZQSeries&, const ZQSeries&) = default;

 private:
  int zmin_;
  std::size_t order_;
  std::vector<QSeries> rows_;
};

ZQSeries operator-(const ZQSeries& a, const ZQSeries& b);
/// Multiplies every z-row by a q-series.
ZQSeries operator*(const QSeries& f, const ZQSeries& a);

/// q -> q^k in every row.
ZQSeries zq_substitute_power(const ZQSeries& a, std::size_t k);
ZQSeries zq_substitute_power(const ZQSeries& a, std::size_t k, std::size_t target_order);

/// Exact quotient by (1 - z)(1 - 1/z), performed per q-power by synthetic
/// division in z. The window shrinks to [zmin + 1, zmax - 1]. Throws
/// NotDivisible(n) at the first q-power with a nonzero remainder.
ZQSeries zq_divide_crank_kernel(const ZQSeries& numerator);

}  // namespace sptcrank
