#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sptcrank::analytic {

using complex = std::complex<double>;

inline constexpr double kMinY = 1e-4;
inline constexpr double kToleranceFloor = 1e-12;
inline constexpr std::size_t kMaxTerms = 1'000'000;

/// z = x + iy in the upper half-plane, with q = e^{2 pi i z}, tau = z - 1/2
/// and Q = e^{2 pi i tau} = -q.
class ComplexPoint {
 public:
  ComplexPoint(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  complex z() const noexcept { return {x_, y_}; }
  complex tau() const noexcept { return {x_ - 0.5, y_}; }
  complex q() const;
  complex Q() const;
  /// The point k z, so that evaluating there gives the value at q^k.
  ComplexPoint scaled(double k) const { return {k * x_, k * y_}; }

 private:
  double x_;
  double y_;
};

/// Parameters (A, B) of h_{A,B}, stored doubled: 2A >= 1, 2A + 2B even and
/// A + B >= 1.
class HParams {
 public:
  static HParams from_doubled(int two_a, int two_b);
  static HParams from_halves(double a, double b);

  int two_a() const noexcept { return two_a_; }
  int two_b() const noexcept { return two_b_; }
  double A() const noexcept { return two_a_ / 2.0; }
  double B() const noexcept { return two_b_ / 2.0; }
  bool b_half_integer() const noexcept { return two_b_ % 2 != 0; }

 private:
  HParams(int two_a, int two_b) : two_a_(two_a), two_b_(two_b) {}
  int two_a_;
  int two_b_;
};

/// h_{A,B}(q) = sum_{n>=1} (-1)^n q^{A n^2 + B n} / (1 - q^n).
///
/// Summation stops once the tail bound |q|^{An^2+Bn} / (1 - |q|^n) drops
/// below tol * (1 + |partial sum|). Needs y >= kMinY and tol >= kToleranceFloor.
complex eval_h(const HParams& p, const ComplexPoint& pt, double tol = 1e-12);

/// f_{j,a,b}(z) = sum_{n>=1} (-1)^n n^{-j} q^{(a n^2 + b n)/2}, same stopping rule.
complex eval_f(int j, int a, int b, const ComplexPoint& pt, double tol = 1e-12);

enum class Verdict { Bounded, Unbounded, InsufficientData };
const char* verdict_name(Verdict v);

/// Where the pole checks sample the cone |x - x_pole| <= y: at its center
/// x = x_pole, or on its edge x = x_pole + y.
enum class ConeSampling { Center, Edge };

struct ResidualRow {
  double y;
  complex value;
  complex main_term;
  double residual;         // |value - main_term|
  double residual_times_y;
};

struct ResidualTable {
  std::vector<ResidualRow> rows;
  double max_residual = 0.0;
  Verdict verdict = Verdict::InsufficientData;
};

/// Bound on |h - main term| used by the pole checks. Measured maxima over
/// y = 2^-4..2^-10: 0.624 (q = 1) and 0.499 (q = -1) for (A,B) = (1/2,3/2);
/// 0.475 and 0.660 for (3/2,1/2). Edge sampling reaches 0.828.
inline constexpr double kPoleResidualBound = 1.0;

/// Residuals of h_{A,B} against log 2 / (2 pi i z) along x = 0. `ys` must be
/// strictly decreasing in (kMinY, 0.1]. Bounded means every residual is at
/// most `bound` and residual * y strictly decreases.
ResidualTable check_pole_one(const HParams& p, std::span<const double> ys,
                             double bound = kPoleResidualBound, double tol = 1e-12,
                             ConeSampling sampling = ConeSampling::Center);

/// Residuals against log 2 / (4 pi i tau) along x = 1/2. Throws BadParity
/// unless 2B is odd.
ResidualTable check_pole_minus_one(const HParams& p, std::span<const double> ys,
                                   double bound = kPoleResidualBound, double tol = 1e-12,
                                   ConeSampling sampling = ConeSampling::Center);

struct AwayReport {
  double y = 0.0;
  std::size_t points = 0;
  double max_scaled = 0.0;  // max over xs of |h| * y^{3/2}
  double argmax_x = 0.0;
};

/// |h_{A,B}| y^{3/2} over sample points x in [y, 1/2 - y]. Throws EmptyBand
/// when xs is empty.
AwayReport check_away(const HParams& p, double y, std::span<const double> xs,
                      double tol = 1e-12);

/// `count` equispaced points covering [y, 1/2 - y] including both endpoints.
std::vector<double> away_band(double y, std::size_t count);

/// Ceiling for |h| y^{3/2} in the away band. Measured max over y = 2^-4..2^-10
/// is 0.014 for (1/2,3/2) and 0.016 for (3/2,1/2), attained at x = y.
inline constexpr double kAwayBound = 0.5;

struct AwayScan {
  std::vector<AwayReport> reports;
  Verdict verdict = Verdict::InsufficientData;
};

AwayScan check_away_scan(const HParams& p, std::span<const double> ys, std::size_t points = 32,
                         double bound = kAwayBound, double tol = 1e-12);

struct MittagLefflerResult {
  complex lhs;
  complex partial_rhs;
  double gap;
};

/// e^{pi i w} / (1 - e^{2 pi i w}) against its partial-fraction expansion
/// truncated at k = K with terms paired as 1/(w-k) + 1/(w+k).
MittagLefflerResult mittag_leffler_check(complex w, std::size_t K);

}  // namespace sptcrank::analytic
