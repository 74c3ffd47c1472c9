#include "sptcrank/bivariate.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "sptcrank/errors.hpp"
#include "sptcrank/generating.hpp"

namespace sptcrank::gen {

namespace {

// Dense working buffer for a bivariate series over [-window, window] x [0, order].
class ZQBuffer {
 public:
  ZQBuffer(int window, std::size_t order)
      : window_(window), order_(order),
        rows_(static_cast<std::size_t>(2 * window + 1), std::vector<mpz_class>(order + 1)) {}

  std::vector<mpz_class>& row(int m) { return rows_[static_cast<std::size_t>(m + window_)]; }

  // Divides by (1 - z^s q^k), s = +1 or -1: b(m, i) += b(m - s, i - k).
  // Coefficients are nonzero only for |m| <= i, which bounds the sweep.
  void divide_z_factor(int s, std::size_t k) {
    for (std::size_t i = k; i <= order_; ++i) {
      const int reach = std::min(window_, static_cast<int>(i));
      if (s > 0) {
        for (int m = reach; m >= -reach; --m) {
          if (m - 1 < -window_) continue;
          mpz_class& target = row(m)[i];
          target += row(m - 1)[i - k];
        }
      } else {
        for (int m = -reach; m <= reach; ++m) {
          if (m + 1 > window_) continue;
          mpz_class& target = row(m)[i];
          target += row(m + 1)[i - k];
        }
      }
    }
  }

  void add(const ZQBuffer& other) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i <= order_; ++i) rows_[r][i] += other.rows_[r][i];
    }
  }

  ZQSeries finish() && {
    std::vector<QSeries> rows;
    rows.reserve(rows_.size());
    for (auto& r : rows_) rows.emplace_back(std::move(r));
    return ZQSeries(-window_, std::move(rows));
  }

 private:
  int window_;
  std::size_t order_;
  std::vector<std::vector<mpz_class>> rows_;
};

void require_window(std::size_t order, int zwindow) {
  if (zwindow < 0 || static_cast<std::size_t>(zwindow) < order) {
    throw InvalidArgument("z-window must be at least the truncation order");
  }
}

}  // namespace

ZQSeries gen_SC1_bivariate(std::size_t order, int zwindow) {
  require_window(order, zwindow);
  ZQBuffer buf(zwindow, order);
  // (1 + x) / ((1 - z x)(1 - x/z)) = 1/(1 - x) * (sum_{k>=0} z^k x^k + sum_{k>=1} z^{-k} x^k)
  for (std::size_t n = 1; n * (n + 1) / 2 <= order; ++n) {
    const int sign = (n % 2 == 1) ? 1 : -1;
    for (std::size_t k = 0; n * (n + 1) / 2 + n * k <= order; ++k) {
      const std::size_t e = n * (n + 1) / 2 + n * k;
      const int m = static_cast<int>(k);
      detail::lambert_accumulate(buf.row(m), sign, e, n, 1);
      if (k > 0) detail::lambert_accumulate(buf.row(-m), sign, e, n, 1);
    }
    for (std::size_t k = 0; 3 * n * n + n + 2 * n * k <= order; ++k) {
      const std::size_t e = 3 * n * n + n + 2 * n * k;
      const int m = static_cast<int>(k);
      detail::lambert_accumulate(buf.row(m), -sign, e, 2 * n, 1);
      if (k > 0) detail::lambert_accumulate(buf.row(-m), -sign, e, 2 * n, 1);
    }
  }
  const auto terms = euler_terms(2, order);
  for (int m = -zwindow; m <= zwindow; ++m) {
    detail::divide_sparse_monic(buf.row(m), terms);
  }
  return std::move(buf).finish();
}

ZQSeries gen_rank_bivariate(std::size_t order, int zwindow) {
  require_window(order, zwindow);
  ZQBuffer total(zwindow, order);
  for (std::size_t n = 0; n * n <= order; ++n) {
    ZQBuffer term(zwindow, order);
    term.row(0)[n * n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      term.divide_z_factor(+1, k);
      term.divide_z_factor(-1, k);
    }
    total.add(term);
  }
  return std::move(total).finish();
}

ZQSeries gen_crank_bivariate(std::size_t order, int zwindow) {
  require_window(order, zwindow);
  ZQBuffer buf(zwindow, order);
  buf.row(0) = pochhammer(1, 1, kInfiniteProduct, order).release();
  for (std::size_t k = 1; k <= order; ++k) {
    buf.divide_z_factor(+1, k);
    buf.divide_z_factor(-1, k);
  }
  return std::move(buf).finish();
}

ZQSeries assemble_SC1_from_rank_crank(std::size_t order, int zwindow) {
  require_window(order, zwindow);
  const ZQSeries rank_q2 = zq_substitute_power(gen_rank_bivariate(order / 2, zwindow), 2, order);
  const ZQSeries crank = gen_crank_bivariate(order, zwindow);
  const QSeries odd_product = pochhammer(1, 2, kInfiniteProduct, order);
  return zq_divide_crank_kernel(rank_q2 - odd_product * crank);
}

CheckResult check_SC1_constructions(std::size_t order) {
  CheckResult result{.name = "S_C1 univariate / bivariate / rank-crank agreement"};
  if (order > kRankCrankAssemblyMaxOrder) {
    throw InvalidArgument("rank/crank assembly is capped at order " +
                          std::to_string(kRankCrankAssemblyMaxOrder));
  }
  const int window = static_cast<int>(order) + 1;
  const ZQSeries bivariate = gen_SC1_bivariate(order, window);
  const ZQSeries assembled = assemble_SC1_from_rank_crank(order, window);
  const int reach = static_cast<int>(order);
  for (int m = -reach; m <= reach; ++m) {
    ++result.checked;
    const QSeries univariate = gen_SC1_m(m, order);
    const auto a = first_mismatch(univariate, bivariate.row(m));
    const auto b = first_mismatch(univariate, assembled.row(m));
    if (a || b) {
      result.passed = false;
      result.first_failure = a ? *a : *b;
      result.detail = std::string(a ? "bivariate" : "rank/crank") + " differs at m = " +
                      std::to_string(m) + ", n = " + std::to_string(*result.first_failure);
      return result;
    }
  }
  if (!bivariate.is_symmetric() || !assembled.is_symmetric()) {
    result.passed = false;
    result.detail = "z <-> 1/z symmetry broken";
  }
  return result;
}

}  // namespace sptcrank::gen
