#pragma once

// Test-only reference computations. These deliberately avoid the library's
// series kernels: plain int64 schoolbook arithmetic on small orders.

#include <cstdint>
#include <vector>

namespace oracles {

using Poly = std::vector<std::int64_t>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly c(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Long division of a by b (b[0] == 1) to the given order.
inline Poly long_divide(const Poly& a, const Poly& b, std::size_t order) {
  Poly rem(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) rem[i] = a[i];
  Poly quo(order + 1, 0);
  for (std::size_t i = 0; i <= order; ++i) {
    quo[i] = rem[i];
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) rem[i + j] -= quo[i] * b[j];
  }
  return quo;
}

// prod_{k=1}^{order} (1 - q^k) by repeated binomial multiplication.
inline Poly euler_product(std::size_t order) {
  Poly p(order + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    Poly factor(k + 1, 0);
    factor[0] = 1;
    factor[k] = -1;
    p = mul(p, factor, order);
  }
  return p;
}

// Partitions of n into parts from a predicate, by dynamic programming.
template <class Pred>
std::int64_t restricted_partitions(int n, Pred allowed) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    if (!allowed(part)) continue;
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  }
  return ways[static_cast<std::size_t>(n)];
}

inline std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

}  // namespace oracles
