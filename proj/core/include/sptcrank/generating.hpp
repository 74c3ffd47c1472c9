#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sptcrank/check.hpp"
#include "sptcrank/series.hpp"

namespace sptcrank::gen {

/// The two spt-crank families: C1 explains spt_omega, C5 explains
/// spt_omega(n) - spt(n/2).
enum class Family { C1, C5 };

const char* family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Nonzero terms of (q^k; q^k)_inf below q^order, excluding the constant 1,
/// from the pentagonal number theorem.
std::vector<std::pair<std::size_t, long>> euler_terms(std::size_t k, std::size_t order);

/// 1 / (q^k; q^k)_inf.
QSeries gen_euler_inverse(std::size_t k, std::size_t order);
/// Partition numbers p(n).
QSeries gen_partitions(std::size_t order);

/// sum p_omega(n) q^n from the three-factor product sum.
QSeries gen_p_omega(std::size_t order);
/// q * omega(q) from the third-order mock theta series.
QSeries gen_q_omega(std::size_t order);

/// sum spt_omega(n) q^n from its two Lambert sums over (q^2;q^2)_inf.
QSeries gen_spt_omega(std::size_t order);
/// The same series from the product form sum q^n / ((1-q^n)^2 (q^{n+1})_n (q^{2n+2};q^2)_inf).
QSeries gen_spt_omega_product(std::size_t order);

/// Classical spt(n), via spt(n) = n p(n) - N_2(n) / 2.
QSeries gen_spt(std::size_t order);
/// Classical spt(n) from the product form sum q^n / ((1-q^n)^2 (q^{n+1};q)_inf).
QSeries gen_spt_product(std::size_t order);

/// sum sigma_1(n) q^n by divisor sieve.
QSeries gen_sigma1(std::size_t order);
/// E_2 = 1 - 24 sum sigma_1(n) q^n.
QSeries gen_E2(std::size_t order);
/// R_2 = sum N_2(n)/2 q^n from its Lambert form over (q;q)_inf.
QSeries gen_R2(std::size_t order);

/// sum_n N_C(m, n) q^n. Depends on m only through |m|.
QSeries gen_SC_m(Family family, int m, std::size_t order);
inline QSeries gen_SC1_m(int m, std::size_t order) { return gen_SC_m(Family::C1, m, order); }
inline QSeries gen_SC5_m(int m, std::size_t order) { return gen_SC_m(Family::C5, m, order); }

/// S_{C,m} - S_{C,m+1} built directly from its theta-difference form, m >= 0.
QSeries gen_SD(Family family, int m, std::size_t order);
inline QSeries gen_SD_C1(int m, std::size_t order) { return gen_SD(Family::C1, m, order); }
inline QSeries gen_SD_C5(int m, std::size_t order) { return gen_SD(Family::C5, m, order); }

/// First index at which two series differ, compared up to the smaller order.
std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b);

struct MockIdentitySides {
  QSeries spt_omega;  // Lambert construction
  QSeries modular;    // sigma_1 / (q^2;q^2)_inf - R_2(q^2), via (1 - E_2)/24
};

MockIdentitySides mock_identity_sides(std::size_t order);

struct MockIdentityReport {
  std::size_t order = 0;
  bool success = false;
  std::optional<std::size_t> first_mismatch;
};

MockIdentityReport compare_mock_identity(const MockIdentitySides& sides);
/// Checks spt_omega = sigma_1/(q^2;q^2)_inf - R_2(q^2) coefficientwise.
MockIdentityReport verify_mock_identity(std::size_t order);

/// spt_omega(5k+3) = 0 mod 5 for all 5k+3 <= order.
CheckResult check_spt_omega_congruence(const QSeries& spt_omega);

}  // namespace sptcrank::gen
