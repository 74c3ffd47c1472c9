#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <vector>

namespace sptcrank::oracle {

inline constexpr int kDefaultCap = 70;

/// A weakly decreasing sequence of positive parts.
struct Partition {
  std::vector<int> parts;
  int n = 0;

  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int smallest() const { return parts.empty() ? 0 : parts.back(); }
  int smallest_multiplicity() const;
  /// Largest part minus number of parts.
  int rank() const { return largest() - static_cast<int>(parts.size()); }
  /// Every odd part is smaller than twice the smallest part.
  bool is_omega() const;
};

/// Single-pass stream over the partitions of n in descending lexicographic
/// order, starting from [n] and ending at [1, ..., 1]. Holds one partition
/// at a time. n = 0 yields the single empty partition.
class PartitionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class PartitionStream;
    explicit iterator(int n);
    Partition current_;
    bool done_ = true;
  };

  explicit PartitionStream(int n, int cap = kDefaultCap);
  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

/// Throws CapExceeded when n > cap.
PartitionStream enumerate(int n, int cap = kDefaultCap);

std::uint64_t partition_count(int n, int cap = kDefaultCap);
std::uint64_t p_omega_oracle(int n, int cap = kDefaultCap);
std::uint64_t spt_omega_oracle(int n, int cap = kDefaultCap);
std::uint64_t spt_oracle(int n, int cap = kDefaultCap);
/// N(m, n): partitions of n with rank m.
std::uint64_t rank_count_oracle(int m, int n, int cap = kDefaultCap);
/// N_2(n) = sum over m of m^2 N(m, n).
std::uint64_t rank_moment2_oracle(int n, int cap = kDefaultCap);

/// Every statistic above from a single enumeration pass.
struct OracleStats {
  int n = 0;
  std::uint64_t partitions = 0;
  std::uint64_t p_omega = 0;
  std::uint64_t spt_omega = 0;
  std::uint64_t spt = 0;
  std::uint64_t rank_moment2 = 0;
  std::map<int, std::uint64_t> rank_counts;
};

OracleStats oracle_stats(int n, int cap = kDefaultCap);

}  // namespace sptcrank::oracle
