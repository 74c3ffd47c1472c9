// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sptcrank/analytic.hpp"
#include "sptcrank/asymptotics.hpp"
#include "sptcrank/bivariate.hpp"
#include "sptcrank/crank_table.hpp"
#include "sptcrank/generating.hpp"
#include "sptcrank/partitions.hpp"

using namespace sptcrank;
using gen::Family;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.passed) o.detail.clear();
  o.passed = false;
  o.detail += (o.detail.empty() ? "" : "; ") + why;
}

std::string where(const CheckResult& c) {
  std::string s = c.name;
  if (c.first_failure) s += " first failure at " + std::to_string(*c.first_failure);
  if (!c.detail.empty()) s += " (" + c.detail + ")";
  return s;
}

Outcome congruence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto check = gen::check_spt_omega_congruence(gen::gen_spt_omega(2000));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!check.passed) fail(o, where(check));
  if (secs >= 30) fail(o, "took " + std::to_string(secs) + " s");
  if (o.passed) o.detail = std::to_string(check.checked) + " values 5k+3 <= 2000";
  return o;
}

Outcome equidistribution() {
  Outcome o;
  const auto check = gen::check_equidistribution(1000);
  if (!check.passed) fail(o, where(check));
  else o.detail = std::to_string(check.checked) + " values n = 5k+3 <= 1000";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::size_t N = 60;
  const QSeries p_omega = gen::gen_p_omega(N);
  const QSeries spt_omega = gen::gen_spt_omega(N);
  const QSeries spt = gen::gen_spt(N);
  const QSeries r2 = gen::gen_R2(N);
  for (std::size_t n = 0; n <= N && o.passed; ++n) {
    const auto s = oracle::oracle_stats(static_cast<int>(n));
    const std::string at = " at n = " + std::to_string(n);
    if (p_omega[n] != s.p_omega) fail(o, "p_omega" + at);
    if (spt_omega[n] != s.spt_omega) fail(o, "spt_omega" + at);
    if (spt[n] != s.spt) fail(o, "spt" + at);
    if (2 * r2[n] != s.rank_moment2) fail(o, "N2/2" + at);
  }
  if (o.passed) o.detail = "p_omega, spt_omega, spt, N2/2 for n <= 60";
  return o;
}

Outcome marginals() {
  Outcome o;
  for (Family f : {Family::C1, Family::C5}) {
    const auto check = gen::check_marginals(f, 1000);
    if (!check.passed) fail(o, where(check));
  }
  // spt from its product form, checked against the Lambert form and enumeration.
  const QSeries lambert = gen::gen_spt(500);
  const QSeries product = gen::gen_spt_product(500);
  if (const auto at = gen::first_mismatch(lambert, product)) {
    fail(o, "spt constructions differ at " + std::to_string(*at));
  }
  for (int n = 0; n < 60; ++n) {
    if (product[static_cast<std::size_t>(n)] != oracle::spt_oracle(n)) {
      fail(o, "spt differs from enumeration at " + std::to_string(n));
      break;
    }
  }
  if (o.passed) o.detail = "C1 and C5 for n <= 1000";
  return o;
}

Outcome triple_construction() {
  Outcome o;
  const auto check = gen::check_SC1_constructions(200);
  if (!check.passed) fail(o, where(check));
  else o.detail = std::to_string(check.checked) + " rows to order 200, zero kernel remainder";
  return o;
}

Outcome mock_identity() {
  Outcome o;
  const auto report = gen::verify_mock_identity(500);
  if (!report.success) {
    fail(o, "mismatch at " + (report.first_mismatch ? std::to_string(*report.first_mismatch) : "?"));
  } else {
    o.detail = "order 500";
  }
  return o;
}

Outcome asymptotic_convergence() {
  Outcome o;
  const std::vector<std::size_t> grid{500, 1000, 2000, 4000};
  std::ostringstream summary;
  for (Family f : {Family::C1, Family::C5}) {
    for (int m = 0; m <= 2; ++m) {
      const auto report = asym::ratio_scan(f, m, gen::gen_SC_m(f, m, 4000), grid);
      const double first = std::abs(report.points.front().ratio - 1);
      const double last = std::abs(report.points.back().ratio - 1);
      char buf[96];
      std::snprintf(buf, sizeof buf, " %s/m=%d %.4f->%.4f", gen::family_name(f), m, first, last);
      summary << buf;
      if (!(last < first)) fail(o, std::string(gen::family_name(f)) + " m=" + std::to_string(m) + " raw");
      if (report.trend != asym::Trend::Converging) {
        fail(o, std::string(gen::family_name(f)) + " m=" + std::to_string(m) + " " +
                    asym::trend_name(report.trend));
      }
    }
  }
  if (o.passed) o.detail = "|ratio-1| 500->4000:" + summary.str();
  return o;
}

Outcome sign_pattern() {
  Outcome o;
  std::ostringstream n0s;
  for (Family f : {Family::C1, Family::C5}) {
    n0s << ' ' << gen::family_name(f) << " n0 =";
    for (int m = 0; m <= 4; ++m) {
      const auto a = asym::sign_scan(f, m, 2000);
      const auto b = asym::sign_scan(f, m, 2000);
      n0s << ' ' << a.n0;
      if (!a.holds) fail(o, std::string(gen::family_name(f)) + " m=" + std::to_string(m));
      if (a.n0 != b.n0 || a.holds != b.holds) fail(o, "non-reproducible n0");
    }
  }
  if (o.passed) o.detail = "N = 2000," + n0s.str();
  return o;
}

Outcome positivity() {
  Outcome o;
  std::size_t total = 0;
  for (Family f : {Family::C1, Family::C5}) {
    const auto report = gen::positivity_sweep(f, 2000);
    total += report.entries_checked;
    if (!report.negatives.empty()) {
      const auto& first = report.negatives.front();
      fail(o, std::to_string(report.negatives.size()) + " negative in " + gen::family_name(f) +
                  ", first (m,n) = (" + std::to_string(first.m) + "," + std::to_string(first.n) + ")");
    }
  }
  if (o.passed) o.detail = std::to_string(total) + " entries, none negative";
  return o;
}

Outcome pole_lemmas() {
  Outcome o;
  std::vector<double> ys;
  for (int k = 4; k <= 10; ++k) ys.push_back(std::ldexp(1.0, -k));
  double worst = 0.0;
  double worst_away = 0.0;
  for (auto p : {analytic::HParams::from_halves(0.5, 1.5), analytic::HParams::from_halves(1.5, 0.5)}) {
    const std::string tag = "(" + std::to_string(p.two_a()) + "/2," + std::to_string(p.two_b()) + "/2)";
    for (bool at_one : {true, false}) {
      const auto table = at_one ? analytic::check_pole_one(p, ys) : analytic::check_pole_minus_one(p, ys);
      if (table.verdict != analytic::Verdict::Bounded) {
        fail(o, tag + (at_one ? " q=1 " : " q=-1 ") + analytic::verdict_name(table.verdict));
      }
      worst = std::max(worst, table.max_residual);
      // The main term must grow like 1/y: |main| * y is constant.
      const double scale = std::abs(table.rows.front().main_term) * table.rows.front().y;
      for (const auto& row : table.rows) {
        if (std::abs(std::abs(row.main_term) * row.y - scale) > 1e-9 * scale) fail(o, tag + " main term scale");
      }
    }
    const auto away = analytic::check_away_scan(p, ys);
    if (away.verdict != analytic::Verdict::Bounded) fail(o, tag + " away band");
    for (const auto& r : away.reports) worst_away = std::max(worst_away, r.max_scaled);
  }
  if (o.passed) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "max residual %.4f <= %.1f, max |h| y^1.5 %.4f <= %.1f", worst,
                  analytic::kPoleResidualBound, worst_away, analytic::kAwayBound);
    o.detail = buf;
  }
  return o;
}

Outcome wright() {
  Outcome o;
  double previous = INFINITY;
  std::ostringstream gaps;
  for (double u : {5.0, 10.0, 15.0, 20.0}) {
    const double gap = std::abs(asym::wright_P(-0.5, u) - asym::bessel_I(-1.5, 2 * u)) * std::exp(-2 * u);
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3g", gap);
    gaps << buf;
    if (!(gap < previous)) fail(o, "scaled gap rose at u = " + std::to_string(u));
    previous = gap;
  }
  // The same with the lemma's own order -s-1 = -1/2.
  previous = INFINITY;
  for (double u : {5.0, 10.0, 15.0, 20.0}) {
    const double gap = std::abs(asym::wright_P(-0.5, u) - asym::bessel_I(-0.5, 2 * u)) * std::exp(-2 * u);
    if (!(gap < previous)) fail(o, "order -1/2 scaled gap rose at u = " + std::to_string(u));
    previous = gap;
  }
  const auto base = asym::wright_P(-0.5, 10.0, 1.0, 4096);
  const auto doubled = asym::wright_P(-0.5, 10.0, 1.0, 8192);
  const double rel = std::abs(doubled - base) / std::abs(doubled);
  if (!(rel < 1e-6)) fail(o, "step doubling changed P by " + std::to_string(rel));
  if (o.passed) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "; doubling %.2g relative", rel);
    o.detail = "scaled gaps" + gaps.str() + buf;
  }
  return o;
}

Outcome mittag_leffler() {
  Outcome o;
  using analytic::complex;
  for (complex w : {complex(0, 1), complex(0.5, 1), complex(0.3, 0.7)}) {
    const double g3 = analytic::mittag_leffler_check(w, 1000).gap;
    const double g4 = analytic::mittag_leffler_check(w, 10000).gap;
    if (!(g4 < g3)) fail(o, "gap did not shrink");
  }
  const auto half = analytic::mittag_leffler_check(complex(0.5, 0), 10000);
  if (!(std::abs(half.lhs - complex(0, 0.5)) < 1e-6 && std::abs(half.partial_rhs - complex(0, 0.5)) < 1e-6)) {
    fail(o, "w = 1/2 is not i/2");
  }
  if (o.passed) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "w = 1/2 within %.2g of i/2", std::abs(half.partial_rhs - complex(0, 0.5)));
    o.detail = buf;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"congruence", congruence},
      {"equidistribution", equidistribution},
      {"oracle equivalence", oracle_equivalence},
      {"marginals", marginals},
      {"triple construction", triple_construction},
      {"mock modular identity", mock_identity},
      {"asymptotic convergence", asymptotic_convergence},
      {"sign pattern", sign_pattern},
      {"positivity", positivity},
      {"pole lemmas", pole_lemmas},
      {"wright lemma", wright},
      {"mittag-leffler", mittag_leffler},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-24s %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
