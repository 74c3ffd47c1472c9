#include "sptcrank/generating.hpp"

#include <cstdlib>
#include <string>

#include "sptcrank/errors.hpp"

namespace sptcrank::gen {

namespace {

// Adds q^shift * term into acc, where term has order acc.size() - 1 - shift.
void add_shifted(std::vector<mpz_class>& acc, const std::vector<mpz_class>& term,
                 std::size_t shift) {
  for (std::size_t i = 0; i < term.size() && i + shift < acc.size(); ++i) {
    acc[i + shift] += term[i];
  }
}

QSeries divide_by_euler(std::vector<mpz_class> coeffs, std::size_t k, std::size_t first = 0) {
  const auto terms = euler_terms(k, coeffs.size() - 1);
  detail::divide_sparse_monic(coeffs, terms, first);
  return QSeries(std::move(coeffs));
}

}  // namespace

const char* family_name(Family f) { return f == Family::C1 ? "C1" : "C5"; }

std::optional<Family> parse_family(std::string_view name) {
  if (name == "C1" || name == "c1") return Family::C1;
  if (name == "C5" || name == "c5") return Family::C5;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, long>> euler_terms(std::size_t k, std::size_t order) {
  if (k == 0) throw InvalidArgument("euler_terms needs k >= 1");
  std::vector<std::pair<std::size_t, long>> terms;
  for (std::size_t j = 1;; ++j) {
    const long sign = (j % 2 == 0) ? 1 : -1;
    const std::size_t lo = k * (j * (3 * j - 1) / 2);
    const std::size_t hi = k * (j * (3 * j + 1) / 2);
    if (lo > order) break;
    terms.emplace_back(lo, sign);
    if (hi <= order) terms.emplace_back(hi, sign);
  }
  return terms;
}

QSeries gen_euler_inverse(std::size_t k, std::size_t order) {
  return divide_by_euler(QSeries::one(order).release(), k);
}

QSeries gen_partitions(std::size_t order) { return gen_euler_inverse(1, order); }

QSeries gen_p_omega(std::size_t order) {
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t rest = order - n;
    std::vector<mpz_class> term(rest + 1);
    term[0] = 1;
    if (n <= rest) detail::divide_one_minus(term, n);
    for (std::size_t k = n + 1; k <= 2 * n && k <= rest; ++k) detail::divide_one_minus(term, k);
    for (std::size_t k = 2 * n + 2; k <= rest; k += 2) detail::divide_one_minus(term, k);
    add_shifted(acc, term, n);
  }
  return QSeries(std::move(acc));
}

QSeries gen_q_omega(std::size_t order) {
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 0; 2 * n * n + 2 * n + 1 <= order; ++n) {
    const std::size_t shift = 2 * n * n + 2 * n + 1;
    std::vector<mpz_class> term(order - shift + 1);
    term[0] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t e = 2 * k + 1;
      if (e >= term.size()) break;
      detail::divide_one_minus(term, e);
      detail::divide_one_minus(term, e);
    }
    add_shifted(acc, term, shift);
  }
  return QSeries(std::move(acc));
}

QSeries gen_spt_omega(std::size_t order) {
  std::vector<mpz_class> acc(order + 1);
  // sum n q^n / (1 - q^n)
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t e = n; e <= order; e += n) mpz_add_ui(acc[e].get_mpz_t(), acc[e].get_mpz_t(), n);
  }
  // sum (-1)^n (1 + q^{2n}) q^{n(3n+1)} / (1 - q^{2n})^2
  for (std::size_t n = 1; n * (3 * n + 1) <= order; ++n) {
    const int sign = (n % 2 == 0) ? 1 : -1;
    const std::size_t e = n * (3 * n + 1);
    detail::lambert_accumulate(acc, sign, e, 2 * n, 2);
    if (e + 2 * n <= order) detail::lambert_accumulate(acc, sign, e + 2 * n, 2 * n, 2);
  }
  return divide_by_euler(std::move(acc), 2);
}

QSeries gen_spt_omega_product(std::size_t order) {
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t rest = order - n;
    std::vector<mpz_class> term(rest + 1);
    term[0] = 1;
    if (n <= rest) {
      detail::divide_one_minus(term, n);
      detail::divide_one_minus(term, n);
    }
    for (std::size_t k = n + 1; k <= 2 * n && k <= rest; ++k) detail::divide_one_minus(term, k);
    for (std::size_t k = 2 * n + 2; k <= rest; k += 2) detail::divide_one_minus(term, k);
    add_shifted(acc, term, n);
  }
  return QSeries(std::move(acc));
}

QSeries gen_spt(std::size_t order) { return qs_theta(gen_partitions(order)) - gen_R2(order); }

QSeries gen_spt_product(std::size_t order) {
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t rest = order - n;
    std::vector<mpz_class> term(rest + 1);
    term[0] = 1;
    if (n <= rest) {
      detail::divide_one_minus(term, n);
      detail::divide_one_minus(term, n);
    }
    for (std::size_t k = n + 1; k <= rest; ++k) detail::divide_one_minus(term, k);
    add_shifted(acc, term, n);
  }
  return QSeries(std::move(acc));
}

QSeries gen_sigma1(std::size_t order) {
  std::vector<mpz_class> c(order + 1);
  for (std::size_t d = 1; d <= order; ++d) {
    for (std::size_t n = d; n <= order; n += d) mpz_add_ui(c[n].get_mpz_t(), c[n].get_mpz_t(), d);
  }
  return QSeries(std::move(c));
}

QSeries gen_E2(std::size_t order) {
  QSeries e2 = mpz_class(-24) * gen_sigma1(order);
  std::vector<mpz_class> c = std::move(e2).release();
  c[0] = 1;
  return QSeries(std::move(c));
}

QSeries gen_R2(std::size_t order) {
  // -1/(q;q)_inf * sum (-1)^n (1 + q^n) q^{n(3n+1)/2} / (1 - q^n)^2
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 1; n * (3 * n + 1) / 2 <= order; ++n) {
    const int sign = (n % 2 == 0) ? -1 : 1;
    const std::size_t e = n * (3 * n + 1) / 2;
    detail::lambert_accumulate(acc, sign, e, n, 2);
    if (e + n <= order) detail::lambert_accumulate(acc, sign, e + n, n, 2);
  }
  return divide_by_euler(std::move(acc), 1);
}

QSeries gen_SC_m(Family family, int m, std::size_t order) {
  const auto am = static_cast<std::size_t>(std::abs(m));
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 1; n * (n + 1) / 2 + am * n <= order; ++n) {
    const int sign = (n % 2 == 1) ? 1 : -1;
    detail::lambert_accumulate(acc, sign, n * (n + 1) / 2 + am * n, n, 1);
    const std::size_t second =
        (family == Family::C1 ? 3 * n * n + n : n * n + n) + 2 * am * n;
    if (second <= order) detail::lambert_accumulate(acc, -sign, second, 2 * n, 1);
  }
  return divide_by_euler(std::move(acc), 2, std::min(order, am + 1));
}

QSeries gen_SD(Family family, int m, std::size_t order) {
  if (m < 0) throw InvalidArgument("crank difference needs m >= 0");
  const auto um = static_cast<std::size_t>(m);
  std::vector<mpz_class> acc(order + 1);
  for (std::size_t n = 1; n * (n + 1) / 2 + um * n <= order; ++n) {
    const long sign = (n % 2 == 1) ? 1 : -1;
    acc[n * (n + 1) / 2 + um * n] += sign;
    const std::size_t second =
        (family == Family::C1 ? n * (3 * n + 1) : n * (n + 1)) + 2 * um * n;
    if (second <= order) acc[second] -= sign;
  }
  return divide_by_euler(std::move(acc), 2);
}

std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= order; ++n) {
    if (a[n] != b[n]) return n;
  }
  return std::nullopt;
}

MockIdentitySides mock_identity_sides(std::size_t order) {
  // (1 - E_2)/24 = sum sigma_1(n) q^n; the eta quotient q^{1/12}/eta(2z) is 1/(q^2;q^2)_inf.
  const QSeries sigma = qs_divide_exact(QSeries::one(order) - gen_E2(order), mpz_class(24));
  const QSeries euler2 = pochhammer(2, 2, kInfiniteProduct, order);
  const QSeries r2_at_q2 = qs_substitute_power(gen_R2(order / 2), 2, order);
  return {gen_spt_omega(order), qs_mul(sigma, qs_invert(euler2)) - r2_at_q2};
}

MockIdentityReport compare_mock_identity(const MockIdentitySides& sides) {
  MockIdentityReport report;
  report.order = std::min(sides.spt_omega.order(), sides.modular.order());
  report.first_mismatch = first_mismatch(sides.spt_omega, sides.modular);
  report.success = !report.first_mismatch.has_value();
  return report;
}

MockIdentityReport verify_mock_identity(std::size_t order) {
  return compare_mock_identity(mock_identity_sides(order));
}

CheckResult check_spt_omega_congruence(const QSeries& spt_omega) {
  CheckResult result{.name = "spt_omega(5k+3) = 0 mod 5"};
  for (std::size_t n = 3; n <= spt_omega.order(); n += 5) {
    ++result.checked;
    if (!mpz_divisible_ui_p(spt_omega[n].get_mpz_t(), 5)) {
      result.passed = false;
      result.first_failure = n;
      result.detail = "spt_omega(" + std::to_string(n) + ") = " + spt_omega[n].get_str();
      break;
    }
  }
  return result;
}

}  // namespace sptcrank::gen
