#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symzero/big.hpp"

namespace symzero {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws NonPositivePart or NotWeaklyDecreasing.
  static Partition from_parts(std::vector<int> parts);

  /// Parses "6,5,3,2,1,1". An empty string (or "0") is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t k) const { return parts_[k]; }

  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Multiset of hook lengths, kept sorted in decreasing order.
using HookMultiset = std::vector<int>;

/// Hook lengths straight from h(i,j) = lambda_i - j + |{s >= i : lambda_s >= j}|.
/// Quadratic; intended for small shapes and as a reference.
HookMultiset hook_lengths(const Partition& lambda);

/// n! / prod(hooks), the degree of the irreducible character.
BigCount dimension(const Partition& lambda);

/// Every partition of n, in reverse lexicographic order starting at (n).
std::vector<Partition> all_partitions(int n);

}  // namespace symzero
