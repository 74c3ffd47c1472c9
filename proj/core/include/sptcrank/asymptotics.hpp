#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "sptcrank/crank_table.hpp"
#include "sptcrank/generating.hpp"

namespace sptcrank::asym {

/// log of (log 2)/(4 pi sqrt(n)) e^{pi sqrt(n/3)}.
double log_main_term(double n);
/// (log 2)/(4 pi sqrt(n)) e^{pi sqrt(n/3)}, the leading growth of N_C(m, n).
double main_term(double n);

/// log of e^{pi sqrt(n/3)} / (8 sqrt(3) n), the leading size of the crank
/// difference N_C1(m, n) - N_C1(m+1, n).
double log_difference_term(double n);
double difference_term(double n);

/// Natural log of a positive big integer.
double log_of(const mpz_class& value);

enum class Trend { Converging, NotConverging, InsufficientData };
const char* trend_name(Trend t);

struct AsymPoint {
  std::size_t n;
  mpz_class exact;
  double main;
  double ratio;       // exact / main
  double pair_ratio;  // mean of ratio(n - 1) and ratio(n)
};

struct AsymReport {
  gen::Family family;
  int m;
  std::vector<AsymPoint> points;
  Trend trend = Trend::InsufficientData;
};

/// exact / main_term along `grid` (strictly increasing, within [2, table.order()]).
///
/// Converging means |pair_ratio - 1| at the last grid point is below its value
/// at the first, and strictly decreases between consecutive grid points.
/// Averaging n - 1 and n removes the alternating contribution of the q = -1 pole.
AsymReport ratio_scan(const gen::CrankTable& table, int m, std::span<const std::size_t> grid);
/// Same scan from a single row series.
AsymReport ratio_scan(gen::Family family, int m, const QSeries& row,
                      std::span<const std::size_t> grid);

struct SignScan {
  gen::Family family;
  int m;
  std::size_t order;
  /// Smallest n0 with (-1)^{m+n+1} (N(m,n) - N(m+1,n)) > 0 for all n in [n0, order];
  /// 0 when even n = order fails.
  std::size_t n0 = 0;
  bool holds = false;
};

/// Sign pattern of the crank difference from its direct theta-difference series.
SignScan sign_scan(gen::Family family, int m, std::size_t order);
/// Sign pattern of an already computed difference series.
SignScan sign_scan(gen::Family family, int m, const QSeries& difference);

struct DifferencePoint {
  std::size_t n;
  double ratio;       // |difference(n)| / difference_term(n)
  double pair_ratio;  // mean over n - 1 and n
};

/// |N(m,n) - N(m+1,n)| against e^{pi sqrt(n/3)} / (8 sqrt(3) n).
std::vector<DifferencePoint> difference_scan(const QSeries& difference,
                                             std::span<const std::size_t> grid);

/// Wright's P_s(u) = (1/2 pi i) int_{1-Mi}^{1+Mi} v^s e^{u (v + 1/v)} dv by
/// composite Gauss-Legendre quadrature on `steps` panels. Throws Overflow for u > 30.
std::complex<double> wright_P(double s, double u, double M = 1.0, std::size_t steps = 4096);

/// Modified Bessel I_nu(x) for nu in {-3/2, -1/2, 1/2, 3/2}, 0 < x <= 700,
/// from the closed forms in sinh and cosh. Throws UnsupportedOrder otherwise.
double bessel_I(double order, double x);

}  // namespace sptcrank::asym
