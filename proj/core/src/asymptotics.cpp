#include "sptcrank/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sptcrank/errors.hpp"

namespace sptcrank::asym {

namespace {

using std::numbers::ln2;
using std::numbers::pi;

// exact / exp(log_reference), keeping the sign of exact.
double scaled_ratio(const mpz_class& exact, double log_reference) {
  const int s = sgn(exact);
  if (s == 0) return 0.0;
  return s * std::exp(log_of(abs(exact)) - log_reference);
}

void check_grid(std::span<const std::size_t> grid, std::size_t order) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 2 || grid[i] > order) {
      throw GridOutOfRange("grid point " + std::to_string(grid[i]) + " outside [2, " +
                           std::to_string(order) + "]");
    }
    if (i > 0 && grid[i] <= grid[i - 1]) throw InvalidArgument("grid must be strictly increasing");
  }
}

Trend classify(const std::vector<AsymPoint>& pts) {
  if (pts.size() < 2) return Trend::InsufficientData;
  if (!(std::abs(pts.back().ratio - 1.0) < std::abs(pts.front().ratio - 1.0))) {
    return Trend::NotConverging;
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(std::abs(pts[i].pair_ratio - 1.0) < std::abs(pts[i - 1].pair_ratio - 1.0))) {
      return Trend::NotConverging;
    }
  }
  return Trend::Converging;
}

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 5> kGLNodes = {
    0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640, 0.9061798459386640};
constexpr std::array<double, 5> kGLWeights = {
    0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
    0.2369268850561891};

}  // namespace

double log_main_term(double n) {
  if (!(n >= 1.0)) throw InvalidArgument("main term needs n >= 1");
  return std::log(ln2 / (4.0 * pi)) - 0.5 * std::log(n) + pi * std::sqrt(n / 3.0);
}

double main_term(double n) { return std::exp(log_main_term(n)); }

double log_difference_term(double n) {
  if (!(n >= 1.0)) throw InvalidArgument("difference term needs n >= 1");
  return pi * std::sqrt(n / 3.0) - std::log(8.0 * std::sqrt(3.0) * n);
}

double difference_term(double n) { return std::exp(log_difference_term(n)); }

double log_of(const mpz_class& value) {
  if (sgn(value) <= 0) throw InvalidArgument("log of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * ln2;
}

const char* trend_name(Trend t) {
  switch (t) {
    case Trend::Converging:
      return "converging";
    case Trend::NotConverging:
      return "not converging";
    case Trend::InsufficientData:
      return "insufficient data";
  }
  return "unknown";
}

AsymReport ratio_scan(gen::Family family, int m, const QSeries& row,
                      std::span<const std::size_t> grid) {
  check_grid(grid, row.order());
  AsymReport report{.family = family, .m = m};
  for (std::size_t n : grid) {
    const double log_main = log_main_term(static_cast<double>(n));
    const double ratio = scaled_ratio(row[n], log_main);
    const double previous = scaled_ratio(row[n - 1], log_main_term(static_cast<double>(n - 1)));
    report.points.push_back({n, row[n], std::exp(log_main), ratio, 0.5 * (ratio + previous)});
  }
  report.trend = classify(report.points);
  return report;
}

AsymReport ratio_scan(const gen::CrankTable& table, int m, std::span<const std::size_t> grid) {
  return ratio_scan(table.family(), m, table.row(m), grid);
}

SignScan sign_scan(gen::Family family, int m, const QSeries& difference) {
  if (m < 0) throw InvalidArgument("sign scan needs m >= 0");
  const std::size_t order = difference.order();
  if (order < 10) throw InvalidArgument("sign scan needs order >= 10");
  SignScan scan{.family = family, .m = m, .order = order};
  auto positive = [&](std::size_t n) {
    const int s = sgn(difference[n]);
    const bool odd_exponent = (static_cast<std::size_t>(m) + n + 1) % 2 == 1;
    return odd_exponent ? s < 0 : s > 0;
  };
  std::size_t n = order;
  while (n >= 1 && positive(n)) --n;
  scan.n0 = (n == order) ? 0 : n + 1;
  scan.holds = scan.n0 != 0 && 2 * (order - scan.n0) >= order;
  return scan;
}

SignScan sign_scan(gen::Family family, int m, std::size_t order) {
  if (m < 0) throw InvalidArgument("sign scan needs m >= 0");
  return sign_scan(family, m, gen::gen_SD(family, m, order));
}

std::vector<DifferencePoint> difference_scan(const QSeries& difference,
                                             std::span<const std::size_t> grid) {
  check_grid(grid, difference.order());
  std::vector<DifferencePoint> out;
  for (std::size_t n : grid) {
    const double r = std::abs(scaled_ratio(difference[n], log_difference_term(n)));
    const double prev = std::abs(scaled_ratio(difference[n - 1], log_difference_term(n - 1)));
    out.push_back({n, r, 0.5 * (r + prev)});
  }
  return out;
}

std::complex<double> wright_P(double s, double u, double M, std::size_t steps) {
  if (!(u > 0.0)) throw InvalidArgument("wright_P needs u > 0");
  if (u > 30.0) throw Overflow("wright_P needs u <= 30 to stay within double range");
  if (!(M > 0.0)) throw InvalidArgument("wright_P needs M > 0");
  if (steps < 1000) throw InvalidArgument("wright_P needs at least 1000 panels");

  // v = 1 + i t, dv = i dt, so P = (1 / 2 pi) int_{-M}^{M} v^s e^{u (v + 1/v)} dt.
  const double h = 2.0 * M / static_cast<double>(steps);
  std::complex<double> total = 0.0;
  for (std::size_t panel = 0; panel < steps; ++panel) {
    const double mid = -M + (static_cast<double>(panel) + 0.5) * h;
    std::complex<double> panel_sum = 0.0;
    for (std::size_t k = 0; k < kGLNodes.size(); ++k) {
      const std::complex<double> v(1.0, mid + 0.5 * h * kGLNodes[k]);
      panel_sum += kGLWeights[k] * std::pow(v, s) * std::exp(u * (v + 1.0 / v));
    }
    total += 0.5 * h * panel_sum;
  }
  return total / (2.0 * pi);
}

double bessel_I(double order, double x) {
  if (!(x > 0.0) || x > 700.0) throw InvalidArgument("bessel_I needs 0 < x <= 700");
  const double twice = 2.0 * order;
  const long k = std::lround(twice);
  if (std::abs(twice - static_cast<double>(k)) > 1e-12 || (k != 1 && k != -1 && k != 3 && k != -3)) {
    throw UnsupportedOrder();
  }
  double sh = 0.0;
  double ch = 0.0;
  if (x > 20.0) {
    const double half = 0.5 * std::exp(x);
    const double tiny = std::exp(-2.0 * x);
    sh = half * (1.0 - tiny);
    ch = half * (1.0 + tiny);
  } else {
    sh = std::sinh(x);
    ch = std::cosh(x);
  }
  const double prefactor = std::sqrt(2.0 / (pi * x));
  switch (k) {
    case 1:
      return prefactor * sh;
    case -1:
      return prefactor * ch;
    case 3:
      return prefactor * (ch - sh / x);
    default:
      return prefactor * (sh - ch / x);
  }
}

}  // namespace sptcrank::asym
