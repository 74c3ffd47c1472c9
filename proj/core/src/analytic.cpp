#include "sptcrank/analytic.hpp"

#include <cmath>
#include <numbers>

#include "sptcrank/errors.hpp"

namespace sptcrank::analytic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{2 pi i z e} for real e, with the phase reduced modulo 1 before scaling.
complex q_power(const ComplexPoint& pt, double e) {
  const double turns = pt.x() * e;
  const double phase = kTwoPi * (turns - std::floor(turns));
  return std::polar(std::exp(-kTwoPi * pt.y() * e), phase);
}

void check_eval_inputs(const ComplexPoint& pt, double tol) {
  if (pt.y() < kMinY) throw InvalidArgument("evaluation needs y >= 1e-4");
  if (!(tol >= kToleranceFloor)) throw InvalidArgument("tolerance below the 1e-12 floor");
}

void check_ys(std::span<const double> ys) {
  if (ys.empty()) throw InvalidArgument("empty y-grid");
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] > 0.1 || ys[i] < kMinY) throw InvalidArgument("pole checks need kMinY <= y <= 0.1");
    if (i > 0 && !(ys[i] < ys[i - 1])) throw InvalidArgument("y-grid must be strictly decreasing");
  }
}

ResidualTable residual_table(const HParams& p, std::span<const double> ys, double x_pole,
                             ConeSampling sampling, double bound, double tol, bool at_minus_one) {
  check_ys(ys);
  ResidualTable table;
  for (double y : ys) {
    const ComplexPoint pt(sampling == ConeSampling::Edge ? x_pole + y : x_pole, y);
    const complex value = eval_h(p, pt, tol);
    const complex i_unit(0.0, 1.0);
    const complex main = at_minus_one
                             ? std::numbers::ln2 / (4.0 * std::numbers::pi * i_unit * pt.tau())
                             : std::numbers::ln2 / (kTwoPi * i_unit * pt.z());
    const double residual = std::abs(value - main);
    table.rows.push_back({y, value, main, residual, residual * y});
    table.max_residual = std::max(table.max_residual, residual);
  }
  if (table.rows.size() < 2) {
    table.verdict = Verdict::InsufficientData;
    return table;
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    decreasing = decreasing && table.rows[i].residual_times_y < table.rows[i - 1].residual_times_y;
  }
  table.verdict =
      (decreasing && table.max_residual <= bound) ? Verdict::Bounded : Verdict::Unbounded;
  return table;
}

}  // namespace

ComplexPoint::ComplexPoint(double x, double y) : x_(x), y_(y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw InvalidArgument("ComplexPoint needs finite x and y > 0");
  }
}

complex ComplexPoint::q() const { return q_power(*this, 1.0); }
complex ComplexPoint::Q() const { return -q(); }

HParams HParams::from_doubled(int two_a, int two_b) {
  if (two_a < 1) throw InvalidArgument("h_{A,B} needs 2A >= 1");
  if ((two_a + two_b) % 2 != 0) throw InvalidArgument("h_{A,B} needs A + B to be an integer");
  if (two_a + two_b < 2) throw InvalidArgument("h_{A,B} needs A + B >= 1");
  return HParams(two_a, two_b);
}

HParams HParams::from_halves(double a, double b) {
  const double ta = 2.0 * a;
  const double tb = 2.0 * b;
  if (std::abs(ta - std::round(ta)) > 1e-12 || std::abs(tb - std::round(tb)) > 1e-12) {
    throw InvalidArgument("A and B must be half-integers");
  }
  return from_doubled(static_cast<int>(std::lround(ta)), static_cast<int>(std::lround(tb)));
}

complex eval_h(const HParams& p, const ComplexPoint& pt, double tol) {
  check_eval_inputs(pt, tol);
  const double abs_q = std::exp(-kTwoPi * pt.y());
  complex sum = 0.0;
  for (std::size_t n = 1; n <= kMaxTerms; ++n) {
    const double nd = static_cast<double>(n);
    // A n^2 + B n is an integer because A + B is.
    const double e = (p.two_a() * nd * nd + p.two_b() * nd) / 2.0;
    const complex numerator = q_power(pt, e);
    const complex term = numerator / (1.0 - q_power(pt, nd));
    sum += (n % 2 == 0) ? term : -term;
    const double tail = std::pow(abs_q, e) / (1.0 - std::pow(abs_q, nd));
    if (tail < tol * (1.0 + std::abs(sum))) return sum;
  }
  throw NoConvergence("h_{A,B} series did not reach tolerance");
}

complex eval_f(int j, int a, int b, const ComplexPoint& pt, double tol) {
  check_eval_inputs(pt, tol);
  if (a < 1) throw InvalidArgument("f_{j,a,b} needs a >= 1");
  const double abs_q = std::exp(-kTwoPi * pt.y());
  complex sum = 0.0;
  for (std::size_t n = 1; n <= kMaxTerms; ++n) {
    const double nd = static_cast<double>(n);
    const double e = (a * nd * nd + b * nd) / 2.0;
    const double weight = std::pow(nd, -j);
    const complex term = weight * q_power(pt, e);
    sum += (n % 2 == 0) ? term : -term;
    if (e > 0 && weight * std::pow(abs_q, e) < tol * (1.0 + std::abs(sum))) return sum;
  }
  throw NoConvergence("f_{j,a,b} series did not reach tolerance");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Bounded:
      return "bounded";
    case Verdict::Unbounded:
      return "unbounded";
    case Verdict::InsufficientData:
      return "insufficient data";
  }
  return "unknown";
}

ResidualTable check_pole_one(const HParams& p, std::span<const double> ys, double bound,
                             double tol, ConeSampling sampling) {
  return residual_table(p, ys, 0.0, sampling, bound, tol, false);
}

ResidualTable check_pole_minus_one(const HParams& p, std::span<const double> ys, double bound,
                                   double tol, ConeSampling sampling) {
  if (!p.b_half_integer()) throw BadParity();
  return residual_table(p, ys, 0.5, sampling, bound, tol, true);
}

AwayReport check_away(const HParams& p, double y, std::span<const double> xs, double tol) {
  if (xs.empty()) throw EmptyBand();
  if (!(y > 0.0) || y > 0.1) throw InvalidArgument("away check needs 0 < y <= 0.1");
  AwayReport report{.y = y, .points = xs.size()};
  const double scale = std::pow(y, 1.5);
  for (double x : xs) {
    const double ax = std::abs(x);
    if (ax < y - 1e-15 || ax > 0.5 - y + 1e-15) {
      throw InvalidArgument("away check sample outside y <= |x| <= 1/2 - y");
    }
    const double scaled = std::abs(eval_h(p, ComplexPoint(x, y), tol)) * scale;
    if (scaled > report.max_scaled) {
      report.max_scaled = scaled;
      report.argmax_x = x;
    }
  }
  return report;
}

std::vector<double> away_band(double y, std::size_t count) {
  if (count == 0) return {};
  const double lo = y;
  const double hi = 0.5 - y;
  if (hi < lo) throw InvalidArgument("band is empty for this y");
  if (count == 1) return {lo};
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  xs.back() = hi;
  return xs;
}

AwayScan check_away_scan(const HParams& p, std::span<const double> ys, std::size_t points,
                         double bound, double tol) {
  AwayScan scan;
  for (double y : ys) scan.reports.push_back(check_away(p, y, away_band(y, points), tol));
  if (scan.reports.size() < 2) {
    scan.verdict = Verdict::InsufficientData;
    return scan;
  }
  bool bounded = true;
  for (const auto& r : scan.reports) bounded = bounded && r.max_scaled <= bound;
  scan.verdict = bounded ? Verdict::Bounded : Verdict::Unbounded;
  return scan;
}

MittagLefflerResult mittag_leffler_check(complex w, std::size_t K) {
  if (std::abs(w.imag()) > 10.0) throw InvalidArgument("|Im w| must not exceed 10");
  if (std::abs(w - std::round(w.real())) < 1e-8) {
    throw PoleInput();
  }
  const complex i_unit(0.0, 1.0);
  const complex e1 = std::exp(std::numbers::pi * i_unit * w);
  const complex lhs = e1 / (1.0 - e1 * e1);

  // Sum from the smallest terms upwards.
  complex tail = 0.0;
  for (std::size_t k = K; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const complex pair = 1.0 / (w - kd) + 1.0 / (w + kd);
    tail += (k % 2 == 0) ? pair : -pair;
  }
  const complex rhs = 1.0 / (-kTwoPi * i_unit * w) + tail / (-kTwoPi * i_unit);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace sptcrank::analytic
