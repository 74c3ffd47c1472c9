#include "sptcrank/partitions.hpp"

#include <algorithm>

#include "sptcrank/errors.hpp"

namespace sptcrank::oracle {

int Partition::smallest_multiplicity() const {
  if (parts.empty()) return 0;
  const int s = parts.back();
  return static_cast<int>(std::count(parts.begin(), parts.end(), s));
}

bool Partition::is_omega() const {
  if (parts.empty()) return false;
  const int bound = 2 * smallest();
  return std::all_of(parts.begin(), parts.end(),
                     [bound](int p) { return p % 2 == 0 || p < bound; });
}

PartitionStream::iterator::iterator(int n) : done_(false) {
  current_.n = n;
  if (n > 0) current_.parts.push_back(n);
}

PartitionStream::iterator& PartitionStream::iterator::operator++() {
  auto& a = current_.parts;
  int ones = 0;
  while (!a.empty() && a.back() == 1) {
    a.pop_back();
    ++ones;
  }
  if (a.empty()) {
    done_ = true;
    return *this;
  }
  const int v = --a.back();
  int rest = ones + 1;
  while (rest >= v) {
    a.push_back(v);
    rest -= v;
  }
  if (rest > 0) a.push_back(rest);
  return *this;
}

PartitionStream::PartitionStream(int n, int cap) : n_(n) {
  if (n < 0) throw InvalidArgument("partitions of a negative integer");
  if (n > cap) throw CapExceeded(n, cap);
}

PartitionStream enumerate(int n, int cap) { return PartitionStream(n, cap); }

OracleStats oracle_stats(int n, int cap) {
  OracleStats s;
  s.n = n;
  for (const Partition& p : enumerate(n, cap)) {
    ++s.partitions;
    const auto mult = static_cast<std::uint64_t>(p.smallest_multiplicity());
    s.spt += mult;
    if (p.is_omega()) {
      ++s.p_omega;
      s.spt_omega += mult;
    }
    const int r = p.rank();
    ++s.rank_counts[r];
    s.rank_moment2 += static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(r);
  }
  return s;
}

std::uint64_t partition_count(int n, int cap) { return oracle_stats(n, cap).partitions; }

std::uint64_t p_omega_oracle(int n, int cap) {
  std::uint64_t count = 0;
  for (const Partition& p : enumerate(n, cap)) count += p.is_omega() ? 1 : 0;
  return count;
}

std::uint64_t spt_omega_oracle(int n, int cap) {
  std::uint64_t total = 0;
  for (const Partition& p : enumerate(n, cap)) {
    if (p.is_omega()) total += static_cast<std::uint64_t>(p.smallest_multiplicity());
  }
  return total;
}

std::uint64_t spt_oracle(int n, int cap) {
  std::uint64_t total = 0;
  for (const Partition& p : enumerate(n, cap)) {
    total += static_cast<std::uint64_t>(p.smallest_multiplicity());
  }
  return total;
}

std::uint64_t rank_count_oracle(int m, int n, int cap) {
  std::uint64_t count = 0;
  for (const Partition& p : enumerate(n, cap)) {
    if (p.rank() == m) ++count;
  }
  return count;
}

std::uint64_t rank_moment2_oracle(int n, int cap) {
  std::uint64_t total = 0;
  for (const Partition& p : enumerate(n, cap)) {
    const auto r = static_cast<std::int64_t>(p.rank());
    total += static_cast<std::uint64_t>(r * r);
  }
  return total;
}

}  // namespace sptcrank::oracle
