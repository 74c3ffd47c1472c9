#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sptcrank/analytic.hpp"
#include "sptcrank/errors.hpp"
#include "sptcrank/series.hpp"

namespace an = sptcrank::analytic;
using an::complex;
using std::numbers::pi;

namespace {

std::vector<double> dyadic(int from, int to) {
  std::vector<double> ys;
  for (int k = from; k <= to; ++k) ys.push_back(std::ldexp(1.0, -k));
  return ys;
}

}  // namespace

TEST_CASE("ComplexPoint") {
  const an::ComplexPoint pt(0.3, 0.2);
  CHECK(std::abs(pt.q()) == doctest::Approx(std::exp(-2 * pi * 0.2)));
  CHECK(std::abs(pt.Q() + pt.q()) < 1e-15);
  CHECK(pt.scaled(2).y() == doctest::Approx(0.4));
  CHECK_THROWS_AS(an::ComplexPoint(0.0, 0.0), sptcrank::InvalidArgument);
}

TEST_CASE("HParams validation") {
  const auto p = an::HParams::from_halves(0.5, 1.5);
  CHECK(p.two_a() == 1);
  CHECK(p.two_b() == 3);
  CHECK(p.b_half_integer());
  CHECK_THROWS_AS(an::HParams::from_doubled(1, 2), sptcrank::InvalidArgument);
  CHECK_THROWS_AS(an::HParams::from_doubled(0, 2), sptcrank::InvalidArgument);
  CHECK_THROWS_AS(an::HParams::from_doubled(1, -1), sptcrank::InvalidArgument);
}

TEST_CASE("eval_h basics") {
  const auto p = an::HParams::from_halves(0.5, 1.5);
  const an::ComplexPoint pt(0.0, 0.5);
  const complex h = an::eval_h(p, pt);
  CHECK(std::abs(h) < 0.1);

  // Three terms by hand.
  const double q = std::exp(-pi);
  double hand = 0.0;
  for (int n = 1; n <= 3; ++n) {
    hand += (n % 2 ? -1.0 : 1.0) * std::pow(q, 0.5 * n * n + 1.5 * n) / (1 - std::pow(q, n));
  }
  CHECK(std::abs(h - hand) < 1e-9);

  for (double tol : {1e-6, 1e-9, 1e-11}) {
    const an::ComplexPoint p2(0.17, 0.01);
    CHECK(std::abs(an::eval_h(p, p2, tol) - an::eval_h(p, p2, tol / 10)) < 10 * tol);
  }

  const complex a = an::eval_h(p, an::ComplexPoint(0.23, 0.03));
  const complex b = an::eval_h(p, an::ComplexPoint(-0.23, 0.03));
  CHECK(std::abs(a - std::conj(b)) < 1e-12);

  CHECK_THROWS_AS(an::eval_h(p, an::ComplexPoint(0, 1e-5)), sptcrank::InvalidArgument);
  CHECK_THROWS_AS(an::eval_h(p, pt, 1e-14), sptcrank::InvalidArgument);
}

TEST_CASE("eval_h matches exact series coefficients") {
  // h_{1/2,3/2}: exponents (n^2 + 3n)/2 over 1 - q^n.
  const std::size_t order = 600;
  sptcrank::QSeries s(order);
  for (std::size_t n = 1; (n * n + 3 * n) / 2 <= order; ++n) {
    s = sptcrank::lambert_add(std::move(s), n % 2 ? -1 : 1, (n * n + 3 * n) / 2, n);
  }
  const double y = 0.05;
  const double q = std::exp(-2 * pi * y);
  double sum = 0.0;
  for (std::size_t k = order + 1; k-- > 0;) sum = sum * q + s[k].get_d();
  const complex h = an::eval_h(an::HParams::from_halves(0.5, 1.5), an::ComplexPoint(0.0, y));
  CHECK(std::abs(h - sum) <= 1e-8 * std::abs(h));
}

TEST_CASE("f limits") {
  const double y = std::ldexp(1.0, -10);
  const an::ComplexPoint pt(0.0, y);
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{3, 1}}) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(std::abs(an::eval_f(1, a, b, pt) + std::log(2.0)) < 0.05);
    // Abel sum of (-1)^n n is -1/4.
    CHECK(std::abs(an::eval_f(-1, a, b, pt) + 0.25) < 0.05);
    const complex expected = -0.5 + (b / 8.0) * (complex(0, -2 * pi) * pt.z());
    CHECK(std::abs(an::eval_f(0, a, b, pt) - expected) < 10 * y * y);
  }
}

TEST_CASE("pole at q = 1") {
  const auto ys = dyadic(4, 10);
  for (auto p : {an::HParams::from_halves(0.5, 1.5), an::HParams::from_halves(1.5, 0.5)}) {
    const auto table = an::check_pole_one(p, ys);
    CHECK(table.rows.size() == ys.size());
    CHECK(table.verdict == an::Verdict::Bounded);
    CHECK(table.max_residual <= an::kPoleResidualBound);
    for (const auto& row : table.rows) {
      CHECK(row.residual < 0.1 * std::abs(row.main_term) + an::kPoleResidualBound);
    }
    CHECK(table.rows.back().residual / std::abs(table.rows.back().main_term) < 0.01);
  }
  const std::vector<double> one{0.05};
  CHECK(an::check_pole_one(an::HParams::from_halves(0.5, 1.5), one).verdict ==
        an::Verdict::InsufficientData);
  const std::vector<double> increasing{0.01, 0.02};
  CHECK_THROWS_AS(an::check_pole_one(an::HParams::from_halves(0.5, 1.5), increasing),
                  sptcrank::InvalidArgument);
}

TEST_CASE("pole checks on the cone edge") {
  const auto ys = dyadic(4, 10);
  for (auto p : {an::HParams::from_halves(0.5, 1.5), an::HParams::from_halves(1.5, 0.5)}) {
    const auto one = an::check_pole_one(p, ys, an::kPoleResidualBound, 1e-12, an::ConeSampling::Edge);
    const auto minus =
        an::check_pole_minus_one(p, ys, an::kPoleResidualBound, 1e-12, an::ConeSampling::Edge);
    CHECK(one.verdict == an::Verdict::Bounded);
    CHECK(minus.verdict == an::Verdict::Bounded);
    // The edge point has |z| = sqrt(2) y.
    CHECK(std::abs(one.rows[0].main_term) ==
          doctest::Approx(std::log(2.0) / (2 * pi * std::sqrt(2.0) * ys[0])));
  }
}

TEST_CASE("pole at q = -1") {
  const auto ys = dyadic(4, 9);
  const auto table = an::check_pole_minus_one(an::HParams::from_halves(0.5, 1.5), ys);
  CHECK(table.verdict == an::Verdict::Bounded);

  const std::vector<double> coarse{0.1};
  const auto single = an::check_pole_minus_one(an::HParams::from_halves(0.5, 1.5), coarse);
  CHECK(std::isfinite(single.rows[0].residual));
  CHECK(std::abs(single.rows[0].main_term) ==
        doctest::Approx(std::log(2.0) / (4 * pi * 0.1)));

  CHECK_THROWS_AS(an::check_pole_minus_one(an::HParams::from_halves(1, 1), ys), sptcrank::BadParity);
}

TEST_CASE("away from the poles") {
  const auto p = an::HParams::from_halves(0.5, 1.5);
  const auto xs = an::away_band(0.01, 32);
  CHECK(xs.size() == 32);
  CHECK(xs.front() == 0.01);
  CHECK(xs.back() == doctest::Approx(0.49));
  const auto report = an::check_away(p, 0.01, xs);
  CHECK(std::isfinite(report.max_scaled));
  CHECK(report.points == 32);
  CHECK_THROWS_AS(an::check_away(p, 0.01, std::vector<double>{}), sptcrank::EmptyBand);
  CHECK_THROWS_AS(an::check_away(p, 0.01, std::vector<double>{0.005}), sptcrank::InvalidArgument);

  const auto scan = an::check_away_scan(p, dyadic(4, 10));
  CHECK(scan.verdict == an::Verdict::Bounded);
}

TEST_CASE("Mittag-Leffler expansion") {
  const auto half = an::mittag_leffler_check(complex(0.5, 0), 10000);
  CHECK(std::abs(half.lhs - complex(0, 0.5)) < 1e-14);
  CHECK(half.gap < 1e-6);

  for (complex w : {complex(0, 1), complex(0.5, 1), complex(0.3, 0.7)}) {
    double previous = an::mittag_leffler_check(w, 100).gap;
    for (std::size_t K = 200; K <= 12800; K *= 2) {
      const double gap = an::mittag_leffler_check(w, K).gap;
      CHECK(gap <= previous);
      previous = gap;
    }
    const auto r = an::mittag_leffler_check(w, 500);
    const auto c = an::mittag_leffler_check(std::conj(w), 500);
    // Both sides satisfy F(conj w) = -conj F(w).
    CHECK(std::abs(r.lhs + std::conj(c.lhs)) < 1e-12);
    CHECK(std::abs(r.partial_rhs + std::conj(c.partial_rhs)) < 1e-12);
  }
  CHECK_THROWS_AS(an::mittag_leffler_check(complex(2.0, 1e-9), 10), sptcrank::PoleInput);
  CHECK_THROWS_AS(an::mittag_leffler_check(complex(0.5, 11), 10), sptcrank::InvalidArgument);
}
