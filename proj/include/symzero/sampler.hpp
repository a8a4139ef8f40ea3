#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string_view>
#include <vector>

#include "symzero/big.hpp"
#include "symzero/partition.hpp"

namespace symzero {

/// Exact partition numbers p(0..maxN), plus the divisor sums sigma(1..maxN)
/// that the uniform sampler walks over. Immutable once built.
class PartitionCountTable {
 public:
  /// Euler's pentagonal-number recurrence. Throws ResourceLimit when maxN
  /// exceeds `cap`.
  static PartitionCountTable build(int max_n, int cap);
  static PartitionCountTable build(int max_n);

  int max_n() const { return static_cast<int>(counts_.size()) - 1; }
  const BigCount& operator[](int m) const { return counts_[static_cast<std::size_t>(m)]; }
  const std::vector<BigCount>& counts() const { return counts_; }

  std::uint64_t sigma(int k) const { return sigma_[static_cast<std::size_t>(k)]; }

  /// m * p(m) when it fits in 64 bits, else 0. Lets the sampler stay in
  /// machine words for small m.
  std::uint64_t small_total(int m) const {
    return static_cast<std::size_t>(m) < small_totals_.size() ? small_totals_[static_cast<std::size_t>(m)] : 0;
  }
  std::uint64_t small_count(int m) const { return small_counts_[static_cast<std::size_t>(m)]; }

  /// Text cache format: a header line "symzero-ptable 1 <maxN>" followed by
  /// p(0) ... p(maxN), one decimal value per line.
  void save(std::ostream& out) const;
  /// Reads the cache format and cross-checks p(50) and p(100) (whichever are
  /// present) against a fresh computation. Throws Error on any mismatch.
  static PartitionCountTable load(std::istream& in, int cap);

 private:
  explicit PartitionCountTable(std::vector<BigCount> counts);

  std::vector<BigCount> counts_;
  std::vector<std::uint64_t> sigma_;
  std::vector<std::uint64_t> small_counts_;
  std::vector<std::uint64_t> small_totals_;
};

/// Random source for one sample: a pure function of (master_seed, index).
struct SampleStream {
  std::uint64_t master_seed = 0;
  std::uint64_t index = 0;

  using Engine = std::mt19937_64;
  Engine engine() const;
};

inline constexpr std::string_view kRngName = "mt19937_64/splitmix64(seed,index)";

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
/// Seed derived from a master seed and an ordinal (sample index, sweep n, ...).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t ordinal);

/// Uniform integer in [0, bound) by rejection from whole 64-bit words. Both
/// overloads consume the engine identically for equal bounds.
std::uint64_t uniform_below(std::uint64_t bound, SampleStream::Engine& engine);
BigInt uniform_below(const BigInt& bound, SampleStream::Engine& engine);

/// Exactly uniform partition of n. Repeatedly picks a part d and multiplicity
/// j with probability d * p(m - dj) / (m * p(m)), appends j copies of d and
/// continues on m - dj. Throws ResourceLimit if n > table.max_n().
Partition random_partition(int n, const SampleStream& stream, const PartitionCountTable& table);
Partition random_partition(int n, SampleStream::Engine& engine, const PartitionCountTable& table);

}  // namespace symzero
