#include "sptcrank/series.hpp"

#include <algorithm>
#include <utility>

#include "sptcrank/errors.hpp"

namespace sptcrank {

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidArgument("QSeries needs at least one coefficient");
  }
}

QSeries::QSeries(std::size_t order, std::initializer_list<long> leading)
    : coeffs_(order + 1) {
  std::size_t n = 0;
  for (long c : leading) {
    if (n > order) break;
    coeffs_[n++] = c;
  }
}

QSeries QSeries::one(std::size_t order) { return monomial(order, 0, 1); }

QSeries QSeries::monomial(std::size_t order, std::size_t exponent, long coeff) {
  QSeries s(order);
  if (exponent <= order) s.coeffs_[exponent] = coeff;
  return s;
}

mpz_class QSeries::coeff(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : mpz_class(0);
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return sgn(c) == 0; });
}

QSeries QSeries::truncated(std::size_t order) const {
  const std::size_t keep = std::min(order, this->order()) + 1;
  return QSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + keep));
}

std::vector<mpz_class> QSeries::release() && {
  std::vector<mpz_class> out = std::move(coeffs_);
  coeffs_.assign(1, mpz_class(0));
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<mpz_class> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] + b[n];
  return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<mpz_class> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] - b[n];
  return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a) {
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) c[n] = -a[n];
  return QSeries(std::move(c));
}

QSeries operator*(const mpz_class& scalar, const QSeries& a) {
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) c[n] = scalar * a[n];
  return QSeries(std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<mpz_class> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return QSeries(std::move(c));
}

QSeries qs_invert(const QSeries& a) { return qs_divide(QSeries::one(a.order()), a); }

QSeries qs_divide(const QSeries& a, const QSeries& b) {
  const int lead = (abs(b[0]) == 1) ? sgn(b[0]) : 0;
  if (lead == 0) throw NonUnitLeadingCoefficient();

  const std::size_t order = std::min(a.order(), b.order());
  std::vector<mpz_class> out(a.coeffs().begin(), a.coeffs().begin() + order + 1);

  // Normalise to a monic divisor: a / b = (lead * a) / (lead * b).
  std::vector<std::pair<std::size_t, long>> small_terms;
  std::vector<std::pair<std::size_t, mpz_class>> big_terms;
  bool all_small = true;
  for (std::size_t k = 1; k <= order; ++k) {
    if (sgn(b[k]) == 0) continue;
    mpz_class c = lead * b[k];
    if (all_small && c.fits_slong_p()) {
      small_terms.emplace_back(k, c.get_si());
    } else {
      all_small = false;
    }
    big_terms.emplace_back(k, std::move(c));
  }
  if (lead < 0) {
    for (auto& c : out) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  }

  if (all_small) {
    detail::divide_sparse_monic(out, small_terms);
  } else {
    for (std::size_t n = 1; n <= order; ++n) {
      mpz_ptr target = out[n].get_mpz_t();
      for (const auto& [k, c] : big_terms) {
        if (k > n) break;
        mpz_submul(target, c.get_mpz_t(), out[n - k].get_mpz_t());
      }
    }
  }
  return QSeries(std::move(out));
}

QSeries qs_divide_exact(const QSeries& a, const mpz_class& divisor) {
  if (sgn(divisor) == 0) throw InvalidArgument("division by zero");
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (!mpz_divisible_p(a[n].get_mpz_t(), divisor.get_mpz_t())) {
      throw IntegralityViolation(n);
    }
    mpz_divexact(c[n].get_mpz_t(), a[n].get_mpz_t(), divisor.get_mpz_t());
  }
  return QSeries(std::move(c));
}

QSeries qs_substitute_power(const QSeries& a, std::size_t k) {
  if (k == 0) throw InvalidArgument("substitution q -> q^k needs k >= 1");
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t n = 0; n * k <= a.order(); ++n) c[n * k] = a[n];
  return QSeries(std::move(c));
}

QSeries qs_substitute_power(const QSeries& a, std::size_t k, std::size_t target_order) {
  if (k == 0) throw InvalidArgument("substitution q -> q^k needs k >= 1");
  if (a.order() < target_order / k) {
    throw InvalidArgument("series order too small for the requested substitution order");
  }
  std::vector<mpz_class> c(target_order + 1);
  for (std::size_t n = 0; n * k <= target_order; ++n) c[n * k] = a[n];
  return QSeries(std::move(c));
}

QSeries qs_theta(const QSeries& a) {
  std::vector<mpz_class> c(a.order() + 1);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    mpz_mul_ui(c[n].get_mpz_t(), a[n].get_mpz_t(), n);
  }
  return QSeries(std::move(c));
}

QSeries pochhammer(std::size_t start_exp, std::size_t step, std::size_t count,
                   std::size_t order) {
  if (start_exp == 0 || step == 0) {
    throw InvalidArgument("pochhammer needs positive start exponent and step");
  }
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  std::size_t exponent = start_exp;
  for (std::size_t k = 0; k < count && exponent <= order; ++k, exponent += step) {
    detail::multiply_one_minus(c, exponent);
  }
  return QSeries(std::move(c));
}

QSeries lambert_add(QSeries acc, int sign, std::size_t num_exp, std::size_t den_exp,
                    int den_power) {
  if (sign != 1 && sign != -1) throw InvalidArgument("lambert_add sign must be +1 or -1");
  if (den_exp == 0) throw InvalidArgument("lambert_add denominator exponent must be positive");
  if (den_power != 1 && den_power != 2) {
    throw InvalidArgument("lambert_add supports denominator powers 1 and 2");
  }
  if (num_exp > acc.order()) return acc;
  std::vector<mpz_class> c = std::move(acc).release();
  detail::lambert_accumulate(c, sign, num_exp, den_exp, den_power);
  return QSeries(std::move(c));
}

namespace detail {

void lambert_accumulate(std::vector<mpz_class>& coeffs, int sign, std::size_t num_exp,
                        std::size_t den_exp, int den_power) {
  const std::size_t order = coeffs.size() - 1;
  unsigned long weight = 1;
  for (std::size_t e = num_exp; e <= order; e += den_exp) {
    mpz_ptr c = coeffs[e].get_mpz_t();
    if (sign > 0) {
      mpz_add_ui(c, c, weight);
    } else {
      mpz_sub_ui(c, c, weight);
    }
    if (den_power == 2) ++weight;
  }
}

void multiply_one_minus(std::vector<mpz_class>& coeffs, std::size_t exponent) {
  for (std::size_t n = coeffs.size() - 1; n >= exponent; --n) {
    mpz_sub(coeffs[n].get_mpz_t(), coeffs[n].get_mpz_t(), coeffs[n - exponent].get_mpz_t());
    if (n == exponent) break;
  }
}

void divide_one_minus(std::vector<mpz_class>& coeffs, std::size_t exponent) {
  for (std::size_t n = exponent; n < coeffs.size(); ++n) {
    mpz_add(coeffs[n].get_mpz_t(), coeffs[n].get_mpz_t(), coeffs[n - exponent].get_mpz_t());
  }
}

void divide_sparse_monic(std::vector<mpz_class>& coeffs,
                         std::span<const std::pair<std::size_t, long>> terms,
                         std::size_t first) {
  for (std::size_t n = first + 1; n < coeffs.size(); ++n) {
    mpz_ptr target = coeffs[n].get_mpz_t();
    for (const auto& [k, c] : terms) {
      if (k > n - first) break;
      mpz_srcptr prev = coeffs[n - k].get_mpz_t();
      if (c == 1) {
        mpz_sub(target, target, prev);
      } else if (c == -1) {
        mpz_add(target, target, prev);
      } else if (c > 0) {
        mpz_submul_ui(target, prev, static_cast<unsigned long>(c));
      } else {
        mpz_addmul_ui(target, prev, static_cast<unsigned long>(-(c + 1)) + 1UL);
      }
    }
  }
}

}  // namespace detail

}  // namespace sptcrank
