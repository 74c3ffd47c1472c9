#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace sptcrank {

/// Truncated power series in q with exact integer coefficients.
///
/// A series of order N stores the coefficients of q^0 .. q^N. Values are
/// immutable once constructed; binary operations between series of different
/// orders truncate to the smaller order.
class QSeries {
 public:
  /// Zero series of the given order.
  explicit QSeries(std::size_t order);
  /// Takes ownership of `coeffs`; `coeffs.size()` must be at least 1.
  explicit QSeries(std::vector<mpz_class> coeffs);
  QSeries(std::size_t order, std::initializer_list<long> leading);

  static QSeries one(std::size_t order);
  static QSeries monomial(std::size_t order, std::size_t exponent, long coeff = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^n, or zero when n exceeds the order.
  mpz_class coeff(std::size_t n) const;
  bool is_zero() const;
  QSeries truncated(std::size_t order) const;
  /// Releases the coefficient storage; leaves *this as the zero series of order 0.
  std::vector<mpz_class> release() &&;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const mpz_class& scalar, const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);

/// Cauchy product truncated at min(a.order(), b.order()).
QSeries qs_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
/// Throws NonUnitLeadingCoefficient otherwise.
QSeries qs_invert(const QSeries& a);

/// a / b for a unit-leading b. Work is proportional to the number of nonzero
/// coefficients of b, so sparse divisors such as (q^2;q^2)_inf are cheap.
QSeries qs_divide(const QSeries& a, const QSeries& b);

/// Divides every coefficient by `divisor`, throwing IntegralityViolation at
/// the first coefficient that is not a multiple.
QSeries qs_divide_exact(const QSeries& a, const mpz_class& divisor);

/// The substitution q -> q^k at the same truncation order.
QSeries qs_substitute_power(const QSeries& a, std::size_t k);
/// q -> q^k producing a series of `target_order`; needs a.order() >= target_order / k.
QSeries qs_substitute_power(const QSeries& a, std::size_t k, std::size_t target_order);

/// Multiplies each coefficient of q^n by n (the operator q d/dq).
QSeries qs_theta(const QSeries& a);

inline constexpr std::size_t kInfiniteProduct = std::numeric_limits<std::size_t>::max();

/// Truncated expansion of prod_{k=0}^{count-1} (1 - q^{start_exp + k*step}).
/// Pass kInfiniteProduct for the infinite product; factors beyond the order
/// are dropped.
QSeries pochhammer(std::size_t start_exp, std::size_t step, std::size_t count,
                   std::size_t order);

/// acc + sign * q^num_exp / (1 - q^den_exp)^den_power, den_power in {1, 2}.
QSeries lambert_add(QSeries acc, int sign, std::size_t num_exp, std::size_t den_exp,
                    int den_power = 1);

namespace detail {

// In-place kernels shared by the series builders. Each operates on a dense
// coefficient vector truncated at coeffs.size() - 1.
void lambert_accumulate(std::vector<mpz_class>& coeffs, int sign, std::size_t num_exp,
                        std::size_t den_exp, int den_power);
void multiply_one_minus(std::vector<mpz_class>& coeffs, std::size_t exponent);
void divide_one_minus(std::vector<mpz_class>& coeffs, std::size_t exponent);
// Divides in place by a divisor given as its nonzero terms (exponent, coeff),
// with the constant term excluded and assumed to be +1. Coefficients below
// `first` are taken to be zero in both input and output.
void divide_sparse_monic(std::vector<mpz_class>& coeffs,
                         std::span<const std::pair<std::size_t, long>> terms,
                         std::size_t first = 0);

}  // namespace detail

}  // namespace sptcrank
