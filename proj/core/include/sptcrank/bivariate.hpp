#pragma once

#include <cstddef>
#include <optional>

#include "sptcrank/check.hpp"
#include "sptcrank/zseries.hpp"

namespace sptcrank::gen {

// Bivariate generating functions over the z-window [-zwindow, zwindow]. All
// of them need zwindow >= order so that no z-truncation occurs.

/// S_C1(z, q) from the Lambert expansion, with each z-kernel split into two
/// geometric series in z and 1/z.
ZQSeries gen_SC1_bivariate(std::size_t order, int zwindow);

/// Dyson rank generating function sum q^{n^2} / ((zq;q)_n (q/z;q)_n).
ZQSeries gen_rank_bivariate(std::size_t order, int zwindow);

/// Andrews-Garvan crank generating function (q;q)_inf / ((zq;q)_inf (q/z;q)_inf).
ZQSeries gen_crank_bivariate(std::size_t order, int zwindow);

/// (R(z, q^2) - (q;q^2)_inf C(z, q)) / ((1 - z)(1 - 1/z)). The window of the
/// result is [-zwindow + 1, zwindow - 1]. Throws NotDivisible on failure.
ZQSeries assemble_SC1_from_rank_crank(std::size_t order, int zwindow);

/// Upper bound on the order of the rank/crank assembly.
inline constexpr std::size_t kRankCrankAssemblyMaxOrder = 200;

/// Compares univariate Lambert rows, the bivariate Lambert series and the
/// rank/crank assembly coefficientwise up to `order`.
CheckResult check_SC1_constructions(std::size_t order);

}  // namespace sptcrank::gen
