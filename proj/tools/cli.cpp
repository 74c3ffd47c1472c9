#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "sptcrank/analytic.hpp"
#include "sptcrank/asymptotics.hpp"
#include "sptcrank/bivariate.hpp"
#include "sptcrank/crank_table.hpp"
#include "sptcrank/errors.hpp"
#include "sptcrank/generating.hpp"
#include "sptcrank/partitions.hpp"

namespace sptcrank::cli {

namespace {

using json = nlohmann::ordered_json;
using gen::Family;

class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct Options {
  std::string cache_dir = ".sptcrank_cache";
  bool no_cache = false;
  std::string format = "csv";
  std::string out_path;
  bool timestamp = false;

  std::string target;  // table id, suite, scan kind or cache action
  std::optional<std::size_t> order;
  std::string m;
  std::string family;
  bool oracle = false;
  std::string grid = "500,1000,2000,4000";
  double A = 0.5;
  double B = 1.5;
  std::string ys = "2^-4..2^-10";
  std::string at = "one";
  std::size_t points = 32;
  bool edge = false;
  double s = -0.5;
  std::string us = "5,10,15,20";
  std::size_t steps = 4096;
  double M = 1.0;
};

// ---- argument parsing helpers ----

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return value;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

// "0..4", "1,3,5" or "2".
std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const long lo = parse_long(text.substr(0, dots));
    const long hi = parse_long(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty m range '" + text + "'");
    for (long m = lo; m <= hi; ++m) out.push_back(static_cast<int>(m));
  } else {
    for (const auto& part : split(text, ',')) out.push_back(static_cast<int>(parse_long(part)));
  }
  if (out.empty()) throw UsageError("no m values given");
  return out;
}

// "2^-4" or a plain decimal.
double parse_y(const std::string& text) {
  if (text.rfind("2^", 0) == 0) return std::ldexp(1.0, static_cast<int>(parse_long(text.substr(2))));
  return parse_double(text);
}

// "2^-4..2^-10" (every power between) or a comma list.
std::vector<double> parse_ys(const std::string& text) {
  std::vector<double> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    if (lo.rfind("2^", 0) != 0 || hi.rfind("2^", 0) != 0) {
      throw UsageError("y ranges must be powers of two, e.g. 2^-4..2^-10");
    }
    const long a = parse_long(lo.substr(2));
    const long b = parse_long(hi.substr(2));
    const long step = a <= b ? 1 : -1;
    for (long k = a;; k += step) {
      out.push_back(std::ldexp(1.0, static_cast<int>(k)));
      if (k == b) break;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
  } else {
    for (const auto& part : split(text, ',')) out.push_back(parse_y(part));
  }
  return out;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) {
    const long v = parse_long(part);
    if (v < 0) throw UsageError("grid values must be non-negative");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

std::vector<Family> parse_families(const std::string& text, const std::string& fallback) {
  const std::string value = text.empty() ? fallback : text;
  if (value == "both") return {Family::C1, Family::C5};
  if (const auto f = gen::parse_family(value)) return {*f};
  throw UsageError("unknown family '" + value + "' (expected C1, C5 or both)");
}

std::size_t require_order(const Options& opt) {
  if (!opt.order) throw UsageError("--order is required");
  if (*opt.order > kMaxOrder) {
    throw UsageError("--order " + std::to_string(*opt.order) + " exceeds the maximum " +
                     std::to_string(kMaxOrder));
  }
  return *opt.order;
}

// ---- output ----

std::string format_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Report {
  std::string command;
  json params = json::object();
  std::vector<json> rows;
  bool passed = true;
};

std::string render(const Report& r, const Options& opt) {
  std::ostringstream os;
  if (opt.format == "json") {
    json j = json::object();
    j["version"] = SPTCRANK_VERSION;
    j["command"] = r.command;
    j["params"] = r.params;
    if (opt.timestamp) j["generated"] = utc_now();
    j["rows"] = r.rows;
    j["result"] = r.passed ? "PASS" : "FAIL";
    os << j.dump(2) << '\n';
    return os.str();
  }
  os << "# sptcrank " << SPTCRANK_VERSION << ' ' << r.command;
  for (const auto& [key, value] : r.params.items()) os << ' ' << key << '=' << format_cell(value);
  os << '\n';
  if (opt.timestamp) os << "# generated " << utc_now() << '\n';
  if (!r.rows.empty()) {
    bool first = true;
    for (const auto& [key, value] : r.rows.front().items()) {
      os << (first ? "" : ",") << key;
      first = false;
    }
    os << '\n';
    for (const auto& row : r.rows) {
      first = true;
      for (const auto& [key, value] : row.items()) {
        os << (first ? "" : ",") << csv_escape(format_cell(value));
        first = false;
      }
      os << '\n';
    }
  }
  os << "# result " << (r.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + opt.out_path + " for writing");
  file << text;
  if (!file) throw IoError("write failed for " + opt.out_path);
}

// ---- tables ----

Family family_of(TableId id) {
  switch (id) {
    case TableId::SC5_m:
    case TableId::SD_C5_m:
    case TableId::crank_table_C5:
      return Family::C5;
    default:
      return Family::C1;
  }
}

Payload compute(const CacheKey& key) {
  const std::size_t N = key.order;
  switch (key.id) {
    case TableId::p_omega:
      return {gen::gen_p_omega(N)};
    case TableId::spt_omega:
      return {gen::gen_spt_omega(N)};
    case TableId::E2:
      return {gen::gen_E2(N)};
    case TableId::R2:
      return {gen::gen_R2(N)};
    case TableId::SC1_m:
    case TableId::SC5_m:
      return {gen::gen_SC_m(family_of(key.id), *key.m, N)};
    case TableId::SD_C1_m:
    case TableId::SD_C5_m:
      return {gen::gen_SD(family_of(key.id), *key.m, N)};
    case TableId::crank_table_C1:
    case TableId::crank_table_C5: {
      Payload rows;
      gen::for_each_crank_row(family_of(key.id), *key.m, N,
                              [&](int, const QSeries& row) { rows.push_back(row); });
      return rows;
    }
  }
  throw InternalAssertion("unhandled table id");
}

class Context {
 public:
  Context(const Options& opt, std::ostream& err) : opt_(opt), err_(err), cache_(opt.cache_dir, err) {}

  const Options& opt() const { return opt_; }
  std::ostream& err() const { return err_; }
  const Cache& cache() const { return cache_; }

  Payload fetch(const CacheKey& key) const {
    if (!opt_.no_cache) {
      if (auto hit = cache_.load(key)) return std::move(*hit);
    }
    const auto start = std::chrono::steady_clock::now();
    Payload payload = compute(key);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    err_ << "computed " << key.file_name() << " in " << ms << " ms\n";
    if (!opt_.no_cache) cache_.store(key, payload);
    return payload;
  }

  QSeries fetch_row(TableId id, std::optional<int> m, std::size_t order) const {
    return fetch(CacheKey{id, m, order, std::nullopt}).front();
  }

 private:
  const Options& opt_;
  std::ostream& err_;
  Cache cache_;
};

CacheKey table_key(const Options& opt) {
  const auto id = parse_table_id(opt.target);
  if (!id) throw UsageError("unknown table id '" + opt.target + "'");
  CacheKey key{*id, std::nullopt, require_order(opt), std::nullopt};
  if (is_bivariate(*id)) {
    int max_m = key.order == 0 ? 0 : static_cast<int>(key.order) - 1;
    if (!opt.m.empty()) max_m = static_cast<int>(parse_long(opt.m));
    if (max_m < 0) throw UsageError("--m for crank tables is the largest |m| and must be >= 0");
    key.m = max_m;
    key.zwindow = max_m;
  } else if (takes_m(*id)) {
    if (opt.m.empty()) throw UsageError(std::string("table ") + table_name(*id) + " needs --m");
    key.m = static_cast<int>(parse_long(opt.m));
    if ((*id == TableId::SD_C1_m || *id == TableId::SD_C5_m) && *key.m < 0) {
      throw UsageError("difference tables need m >= 0");
    }
  } else if (!opt.m.empty()) {
    throw UsageError(std::string("table ") + table_name(*id) + " takes no --m");
  }
  return key;
}

int cmd_table(const Context& ctx, std::ostream& out) {
  const CacheKey key = table_key(ctx.opt());
  const Payload payload = ctx.fetch(key);
  std::ostringstream os;
  if (ctx.opt().format == "json") {
    os << make_envelope(key, payload).dump() << '\n';
  } else if (is_bivariate(key.id)) {
    os << "m,n,value\n";
    const int max_m = *key.m;
    for (int m = -max_m; m <= max_m; ++m) {
      const QSeries& row = payload[static_cast<std::size_t>(std::abs(m))];
      for (std::size_t n = 0; n <= key.order; ++n) os << m << ',' << n << ',' << row[n].get_str() << '\n';
    }
  } else {
    os << "n,value\n";
    const QSeries& row = payload.front();
    for (std::size_t n = 0; n <= key.order; ++n) os << n << ',' << row[n].get_str() << '\n';
  }
  emit(os.str(), ctx.opt(), out);
  return kPass;
}

// ---- verify ----

json check_row(const CheckResult& c) {
  json row = json::object();
  row["check"] = c.name;
  row["passed"] = c.passed;
  row["checked"] = c.checked;
  row["first_failure"] = c.first_failure ? json(*c.first_failure) : json(nullptr);
  row["detail"] = c.detail;
  return row;
}

CheckResult compare_with_oracle(const std::string& name, const QSeries& series, std::size_t upto,
                                const std::function<std::uint64_t(int)>& oracle_value) {
  CheckResult r{name};
  for (std::size_t n = 0; n <= upto; ++n) {
    ++r.checked;
    if (series[n] != oracle_value(static_cast<int>(n))) {
      r.passed = false;
      r.first_failure = n;
      r.detail = "series " + series[n].get_str() + " vs enumeration " +
                 std::to_string(oracle_value(static_cast<int>(n)));
      break;
    }
  }
  return r;
}

std::vector<CheckResult> suite_oracle(const Context& ctx, std::size_t order) {
  if (order > static_cast<std::size_t>(oracle::kDefaultCap)) {
    throw UsageError("oracle suite is capped at order " + std::to_string(oracle::kDefaultCap));
  }
  std::vector<oracle::OracleStats> stats;
  for (std::size_t n = 0; n <= order; ++n) stats.push_back(oracle::oracle_stats(static_cast<int>(n)));
  auto field = [&](auto member) {
    return [&stats, member](int n) { return stats[static_cast<std::size_t>(n)].*member; };
  };
  const QSeries r2 = ctx.fetch_row(TableId::R2, std::nullopt, order);
  std::vector<mpz_class> doubled(order + 1);
  for (std::size_t n = 0; n <= order; ++n) doubled[n] = 2 * r2[n];
  return {
      compare_with_oracle("p_omega", ctx.fetch_row(TableId::p_omega, std::nullopt, order), order,
                          field(&oracle::OracleStats::p_omega)),
      compare_with_oracle("spt_omega", ctx.fetch_row(TableId::spt_omega, std::nullopt, order), order,
                          field(&oracle::OracleStats::spt_omega)),
      compare_with_oracle("spt", gen::gen_spt(order), order, field(&oracle::OracleStats::spt)),
      compare_with_oracle("N2", QSeries(std::move(doubled)), order,
                          field(&oracle::OracleStats::rank_moment2)),
  };
}

std::vector<CheckResult> suite_congruence(const Context& ctx, std::size_t order) {
  const QSeries s = ctx.fetch_row(TableId::spt_omega, std::nullopt, order);
  std::vector<CheckResult> out{gen::check_spt_omega_congruence(s)};
  if (ctx.opt().oracle) {
    const std::size_t upto = std::min<std::size_t>(order, 60);
    out.push_back(compare_with_oracle("spt_omega-oracle", s, upto,
                                      [](int n) { return oracle::spt_omega_oracle(n); }));
  }
  return out;
}

std::vector<CheckResult> suite_marginals(const Context& ctx, std::size_t order) {
  std::vector<CheckResult> out;
  for (Family f : parse_families(ctx.opt().family, "both")) {
    out.push_back(gen::check_marginals(f, order));
    if (!ctx.opt().oracle || order == 0) continue;
    const std::size_t upto = std::min<std::size_t>(order, 60);
    const auto table = gen::CrankTable::build(f, static_cast<int>(upto) - 1, upto);
    std::vector<mpz_class> marg(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n) marg[n] = table.marginal(n);
    out.push_back(compare_with_oracle(
        std::string("marginal-oracle-") + gen::family_name(f), QSeries(std::move(marg)), upto,
        [f](int n) -> std::uint64_t {
          if (n == 0) return 0;
          std::uint64_t v = oracle::spt_omega_oracle(n);
          if (f == Family::C5 && n % 2 == 0) v -= oracle::spt_oracle(n / 2);
          return v;
        }));
  }
  return out;
}

std::vector<CheckResult> suite_positivity(const Context& ctx, std::size_t order) {
  std::vector<CheckResult> out;
  for (Family f : parse_families(ctx.opt().family, "both")) {
    const auto report = gen::positivity_sweep(f, order);
    CheckResult r{std::string("positivity-") + gen::family_name(f)};
    r.checked = report.entries_checked;
    r.passed = report.negatives.empty();
    for (std::size_t i = 0; i < report.negatives.size() && i < 10; ++i) {
      const auto& neg = report.negatives[i];
      if (!r.first_failure || neg.n < *r.first_failure) r.first_failure = neg.n;
      r.detail += (i ? " " : "") + std::string("(") + std::to_string(neg.m) + "," +
                  std::to_string(neg.n) + ")";
    }
    if (!r.passed) r.detail = std::to_string(report.negatives.size()) + " negative: " + r.detail;
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_verify(const Context& ctx, std::ostream& out) {
  const Options& opt = ctx.opt();
  const std::size_t order = require_order(opt);
  Report report{"verify " + opt.target};
  report.params["order"] = order;
  std::vector<CheckResult> checks;
  if (opt.target == "congruence") {
    checks = suite_congruence(ctx, order);
  } else if (opt.target == "equidistribution") {
    checks.push_back(gen::check_equidistribution(order));
  } else if (opt.target == "marginals") {
    checks = suite_marginals(ctx, order);
  } else if (opt.target == "mock-identity") {
    const auto r = gen::verify_mock_identity(order);
    CheckResult c{"mock-identity", r.success, r.first_mismatch, order + 1};
    checks.push_back(c);
  } else if (opt.target == "prop51") {
    if (order > gen::kRankCrankAssemblyMaxOrder) {
      throw UsageError("prop51 is capped at order " + std::to_string(gen::kRankCrankAssemblyMaxOrder));
    }
    checks.push_back(gen::check_SC1_constructions(order));
  } else if (opt.target == "positivity") {
    checks = suite_positivity(ctx, order);
  } else if (opt.target == "oracle") {
    checks = suite_oracle(ctx, order);
  } else {
    throw UsageError("unknown suite '" + opt.target + "'");
  }
  if (opt.oracle) report.params["oracle"] = true;
  if (!opt.family.empty()) report.params["family"] = opt.family;
  for (const auto& c : checks) {
    report.rows.push_back(check_row(c));
    report.passed = report.passed && c.passed;
  }
  emit(render(report, opt), opt, out);
  return report.passed ? kPass : kFailure;
}

// ---- scan ----

Report scan_signs(const Context& ctx) {
  const Options& opt = ctx.opt();
  const std::size_t order = opt.order ? require_order(opt) : 2000;
  const auto ms = parse_m_list(opt.m.empty() ? "0..4" : opt.m);
  Report r{"scan signs"};
  r.params["family"] = opt.family.empty() ? "C1" : opt.family;
  r.params["m"] = opt.m.empty() ? "0..4" : opt.m;
  r.params["order"] = order;
  for (Family f : parse_families(opt.family, "C1")) {
    for (int m : ms) {
      if (m < 0) throw UsageError("sign scans need m >= 0");
      const auto s = asym::sign_scan(f, m, order);
      json row = json::object();
      row["family"] = gen::family_name(f);
      row["m"] = m;
      row["order"] = order;
      row["n0"] = s.n0;
      row["holds"] = s.holds;
      r.rows.push_back(row);
      r.passed = r.passed && s.holds;
    }
  }
  return r;
}

Report scan_ratio(const Context& ctx) {
  const Options& opt = ctx.opt();
  const auto grid = parse_grid(opt.grid);
  const std::size_t order = *std::max_element(grid.begin(), grid.end());
  if (order > kMaxOrder) throw UsageError("grid exceeds the maximum order");
  const auto ms = parse_m_list(opt.m.empty() ? "0" : opt.m);
  Report r{"scan ratio"};
  r.params["family"] = opt.family.empty() ? "C1" : opt.family;
  r.params["m"] = opt.m.empty() ? "0" : opt.m;
  r.params["grid"] = opt.grid;
  for (Family f : parse_families(opt.family, "C1")) {
    const TableId id = f == Family::C1 ? TableId::SC1_m : TableId::SC5_m;
    for (int m : ms) {
      const auto report = asym::ratio_scan(f, m, ctx.fetch_row(id, m, order), grid);
      for (const auto& pt : report.points) {
        json row = json::object();
        row["family"] = gen::family_name(f);
        row["m"] = m;
        row["n"] = pt.n;
        row["ratio"] = pt.ratio;
        row["pair_ratio"] = pt.pair_ratio;
        row["trend"] = asym::trend_name(report.trend);
        r.rows.push_back(row);
      }
      r.passed = r.passed && report.trend == asym::Trend::Converging;
    }
  }
  return r;
}

Report scan_pole(const Context& ctx) {
  const Options& opt = ctx.opt();
  const double twoA = 2 * opt.A;
  const double twoB = 2 * opt.B;
  if (twoA != std::round(twoA) || twoB != std::round(twoB)) {
    throw UsageError("--A and --B must be half-integers");
  }
  const auto p = analytic::HParams::from_doubled(static_cast<int>(twoA), static_cast<int>(twoB));
  const auto ys = parse_ys(opt.ys);
  Report r{"scan pole"};
  r.params["A"] = opt.A;
  r.params["B"] = opt.B;
  r.params["at"] = opt.at;
  r.params["ys"] = opt.ys;
  if (opt.at == "away") {
    r.params["points"] = opt.points;
    const auto scan = analytic::check_away_scan(p, ys, opt.points);
    for (const auto& rep : scan.reports) {
      json row = json::object();
      row["y"] = rep.y;
      row["points"] = rep.points;
      row["max_scaled"] = rep.max_scaled;
      row["argmax_x"] = rep.argmax_x;
      row["verdict"] = analytic::verdict_name(scan.verdict);
      r.rows.push_back(row);
    }
    r.passed = scan.verdict == analytic::Verdict::Bounded;
    return r;
  }
  const auto sampling = opt.edge ? analytic::ConeSampling::Edge : analytic::ConeSampling::Center;
  if (opt.edge) r.params["sampling"] = "edge";
  analytic::ResidualTable table;
  if (opt.at == "one") {
    table = analytic::check_pole_one(p, ys, analytic::kPoleResidualBound, 1e-12, sampling);
  } else if (opt.at == "minus-one") {
    table = analytic::check_pole_minus_one(p, ys, analytic::kPoleResidualBound, 1e-12, sampling);
  } else {
    throw UsageError("--at must be one, minus-one or away");
  }
  for (const auto& row_in : table.rows) {
    json row = json::object();
    row["y"] = row_in.y;
    row["residual"] = row_in.residual;
    row["main_abs"] = std::abs(row_in.main_term);
    row["residual_times_y"] = row_in.residual_times_y;
    row["verdict"] = analytic::verdict_name(table.verdict);
    r.rows.push_back(row);
  }
  r.passed = table.verdict == analytic::Verdict::Bounded;
  return r;
}

Report scan_wright(const Context& ctx) {
  const Options& opt = ctx.opt();
  const auto us = parse_doubles(opt.us);
  Report r{"scan wright"};
  r.params["s"] = opt.s;
  r.params["us"] = opt.us;
  r.params["M"] = opt.M;
  r.params["steps"] = opt.steps;
  double previous = INFINITY;
  for (double u : us) {
    const auto P = asym::wright_P(opt.s, u, opt.M, opt.steps);
    const double bessel = asym::bessel_I(-opt.s - 1, 2 * u);
    const double scaled = std::abs(P - bessel) * std::exp(-2 * u);
    json row = json::object();
    row["u"] = u;
    row["P_re"] = P.real();
    row["P_im"] = P.imag();
    row["bessel"] = bessel;
    row["scaled_gap"] = scaled;
    r.rows.push_back(row);
    r.passed = r.passed && scaled < previous;
    previous = scaled;
  }
  if (us.size() < 2) r.passed = false;
  return r;
}

int cmd_scan(const Context& ctx, std::ostream& out) {
  const Options& opt = ctx.opt();
  Report report;
  if (opt.target == "signs") {
    report = scan_signs(ctx);
  } else if (opt.target == "ratio") {
    report = scan_ratio(ctx);
  } else if (opt.target == "pole") {
    report = scan_pole(ctx);
  } else if (opt.target == "wright") {
    report = scan_wright(ctx);
  } else {
    throw UsageError("unknown scan kind '" + opt.target + "'");
  }
  emit(render(report, opt), opt, out);
  return report.passed ? kPass : kFailure;
}

// ---- cache ----

int cmd_cache(const Context& ctx, std::ostream& out) {
  if (ctx.opt().target == "clear") {
    const std::size_t removed = ctx.cache().clear();
    out << "removed " << removed << " entries from " << ctx.cache().dir().string() << '\n';
    return kPass;
  }
  bool all_ok = true;
  out << "file,id,order,m,version,checksum\n";
  for (const auto& e : ctx.cache().list()) {
    const json& p = e.params;
    out << e.file << ',' << e.id << ',' << (p.contains("order") ? format_cell(p["order"]) : "")
        << ',' << (p.contains("m") ? format_cell(p["m"]) : "") << ',' << e.version << ','
        << (e.checksum_ok ? "ok" : "bad") << '\n';
    all_ok = all_ok && e.checksum_ok;
  }
  return all_ok ? kPass : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"spt-crank generating functions, verification suites and scans", "sptcrank"};
  app.set_version_flag("--version", std::string("sptcrank ") + SPTCRANK_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache-dir", opt.cache_dir, "cache directory")->envname("SPTCRANK_CACHE_DIR");
  app.add_flag("--no-cache", opt.no_cache, "neither read nor write the cache");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out_path, "write the report to this file");
  app.add_flag("--timestamp", opt.timestamp, "embed the generation time in reports");

  auto* table = app.add_subcommand("table", "compute (or load) a coefficient table");
  table->add_option("id", opt.target, "table id")
      ->required()
      ->check(CLI::IsMember({"p_omega", "spt_omega", "SC1_m", "SC5_m", "SD_C1_m", "SD_C5_m", "E2",
                             "R2", "crank_table_C1", "crank_table_C5"}));
  table->add_option("--order", opt.order, "truncation order");
  table->add_option("--m", opt.m, "crank index; largest |m| for crank tables");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", opt.target, "suite")
      ->required()
      ->check(CLI::IsMember({"congruence", "equidistribution", "marginals", "mock-identity",
                             "prop51", "positivity", "oracle"}));
  verify->add_option("--order", opt.order, "truncation order");
  verify->add_option("--family", opt.family, "C1, C5 or both");
  verify->add_flag("--oracle", opt.oracle, "cross-check against partition enumeration");

  auto* scan = app.add_subcommand("scan", "numeric and asymptotic scans");
  scan->add_option("kind", opt.target, "scan kind")
      ->required()
      ->check(CLI::IsMember({"signs", "ratio", "pole", "wright"}));
  scan->add_option("--order", opt.order, "order for sign scans");
  scan->add_option("--m", opt.m, "m values: 0..4, 0,2 or 3");
  scan->add_option("--family", opt.family, "C1, C5 or both");
  scan->add_option("--grid", opt.grid, "n values for ratio scans");
  scan->add_option("--A", opt.A, "h parameter A");
  scan->add_option("--B", opt.B, "h parameter B");
  scan->add_option("--ys", opt.ys, "y values: 2^-4..2^-10 or a comma list");
  scan->add_option("--at", opt.at, "one, minus-one or away")
      ->check(CLI::IsMember({"one", "minus-one", "away"}));
  scan->add_option("--points", opt.points, "sample points per y in the away band");
  scan->add_flag("--edge", opt.edge, "sample pole cones at their edge instead of their center");
  scan->add_option("--s", opt.s, "Wright integral exponent");
  scan->add_option("--us", opt.us, "Wright integral u values");
  scan->add_option("--steps", opt.steps, "quadrature panels");
  scan->add_option("--M", opt.M, "half-length of the integration segment");

  auto* cache = app.add_subcommand("cache", "inspect or clear the cache");
  cache->add_option("action", opt.target, "list or clear")
      ->required()
      ->check(CLI::IsMember({"list", "clear"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const Context ctx(opt, err);
    if (table->parsed()) return cmd_table(ctx, out);
    if (verify->parsed()) return cmd_verify(ctx, out);
    if (scan->parsed()) return cmd_scan(ctx, out);
    return cmd_cache(ctx, out);
  } catch (const InternalAssertion& e) {
    err << "internal assertion: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace sptcrank::cli
