#include "sptcrank/zseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "sptcrank/errors.hpp"

namespace sptcrank {

ZQSeries::ZQSeries(int zmin, int zmax, std::size_t order) : zmin_(zmin), order_(order) {
  if (zmax < zmin) throw InvalidArgument("ZQSeries window needs zmin <= zmax");
  rows_.assign(static_cast<std::size_t>(zmax - zmin + 1), QSeries(order));
}

ZQSeries::ZQSeries(int zmin, std::vector<QSeries> rows)
    : zmin_(zmin), order_(rows.empty() ? 0 : rows.front().order()), rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidArgument("ZQSeries needs at least one row");
  for (const auto& r : rows_) {
    if (r.order() != order_) throw InvalidArgument("ZQSeries rows must share one order");
  }
}

const QSeries& ZQSeries::row(int m) const {
  if (!contains(m)) {
    throw std::out_of_range("z-exponent " + std::to_string(m) + " outside window");
  }
  return rows_[static_cast<std::size_t>(m - zmin_)];
}

mpz_class ZQSeries::coeff(int m, std::size_t n) const {
  if (!contains(m) || n > order_) return 0;
  return row(m)[n];
}

bool ZQSeries::is_symmetric() const {
  for (int m = zmin(); m <= zmax(); ++m) {
    if (contains(-m)) {
      if (row(m) != row(-m)) return false;
    } else if (!row(m).is_zero()) {
      return false;
    }
  }
  return true;
}

QSeries ZQSeries::at_z_one() const {
  std::vector<mpz_class> sum(order_ + 1);
  for (const auto& r : rows_) {
    for (std::size_t n = 0; n <= order_; ++n) sum[n] += r[n];
  }
  return QSeries(std::move(sum));
}

ZQSeries operator-(const ZQSeries& a, const ZQSeries& b) {
  const int lo = std::min(a.zmin(), b.zmin());
  const int hi = std::max(a.zmax(), b.zmax());
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<QSeries> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) {
    std::vector<mpz_class> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = a.coeff(m, n) - b.coeff(m, n);
    rows.emplace_back(std::move(c));
  }
  return ZQSeries(lo, std::move(rows));
}

ZQSeries operator*(const QSeries& f, const ZQSeries& a) {
  std::vector<QSeries> rows;
  rows.reserve(static_cast<std::size_t>(a.zmax() - a.zmin() + 1));
  for (int m = a.zmin(); m <= a.zmax(); ++m) rows.push_back(qs_mul(f, a.row(m)));
  return ZQSeries(a.zmin(), std::move(rows));
}

ZQSeries zq_substitute_power(const ZQSeries& a, std::size_t k) {
  std::vector<QSeries> rows;
  for (int m = a.zmin(); m <= a.zmax(); ++m) rows.push_back(qs_substitute_power(a.row(m), k));
  return ZQSeries(a.zmin(), std::move(rows));
}

ZQSeries zq_substitute_power(const ZQSeries& a, std::size_t k, std::size_t target_order) {
  std::vector<QSeries> rows;
  for (int m = a.zmin(); m <= a.zmax(); ++m) {
    rows.push_back(qs_substitute_power(a.row(m), k, target_order));
  }
  return ZQSeries(a.zmin(), std::move(rows));
}

ZQSeries zq_divide_crank_kernel(const ZQSeries& numerator) {
  // (1 - z)(1 - 1/z) = -z^{-1} (1 - z)^2, so quotient = (-z * numerator) / (1 - z)^2.
  // Dividing by (1 - z) is a running prefix sum in increasing z-exponent; the
  // final partial sum is the remainder.
  const int lo = numerator.zmin();
  const int hi = numerator.zmax();
  if (hi - lo < 2) throw InvalidArgument("crank-kernel division needs a window of width >= 3");
  const std::size_t order = numerator.order();
  const auto width = static_cast<std::size_t>(hi - lo + 1);

  std::vector<std::vector<mpz_class>> quotient(width - 2, std::vector<mpz_class>(order + 1));
  std::vector<mpz_class> once(width);
  for (std::size_t n = 0; n <= order; ++n) {
    // once[i]: coefficient of z^(lo + 1 + i) in (-z * p) / (1 - z).
    mpz_class running = 0;
    for (std::size_t i = 0; i < width; ++i) {
      running -= numerator.row(lo + static_cast<int>(i))[n];
      once[i] = running;
    }
    if (sgn(once[width - 1]) != 0) throw NotDivisible(n);
    running = 0;
    for (std::size_t i = 0; i + 1 < width; ++i) {
      running += once[i];
      if (i + 2 < width) {
        quotient[i][n] = running;
      } else if (sgn(running) != 0) {
        throw NotDivisible(n);
      }
    }
  }
  std::vector<QSeries> rows;
  rows.reserve(quotient.size());
  for (auto& r : quotient) rows.emplace_back(std::move(r));
  return ZQSeries(lo + 1, std::move(rows));
}

}  // namespace sptcrank
