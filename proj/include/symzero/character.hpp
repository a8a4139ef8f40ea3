#pragma once

#include <cstddef>
#include <unordered_map>

#include "symzero/big.hpp"
#include "symzero/boundary_code.hpp"
#include "symzero/partition.hpp"

namespace symzero {

/// Expansion front of the Murnaghan-Nakayama recursion: canonical shapes
/// (all of the same weight) with their nonzero integer coefficients.
class TermBag {
 public:
  using Map = std::unordered_map<BoundaryCode, CharValue, BoundaryCodeHash>;

  TermBag() = default;
  TermBag(const BoundaryCode& shape, int weight);

  /// Adds sign * coefficient to the entry for `shape`; entries that cancel
  /// to zero are removed.
  void add(BoundaryCode shape, const CharValue& coefficient, int sign);

  int weight() const { return weight_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  /// One MN step: replaces every shape by its rim-hook removals of size
  /// `part`, carrying signs and coefficients.
  TermBag peel(int part) const;

  /// Sum of coefficient * dimension(shape).
  CharValue finish() const;

 private:
  Map terms_;
  int weight_ = 0;
};

/// chi_lambda(mu). Parts of mu larger than 1 are peeled in weakly decreasing
/// order; the surviving shapes are finished with the hook-length formula.
/// Throws WeightMismatch when |lambda| != |mu|.
CharValue character(const Partition& lambda, const Partition& mu);
CharValue character(const BoundaryCode& lambda, const Partition& mu);

/// Zero classification of a table entry. When `evaluated` is false the entry
/// was not computed and `is_zero` only reflects the type-II lower bound.
struct ZeroClass {
  bool is_zero = false;
  bool is_type1 = false;
  bool is_type2 = false;
  bool evaluated = false;
};

/// Type I: lambda is a mu_1-core. Type II: lambda is a t-core for some part t
/// of mu. With `evaluate`, entries that are not type II are computed exactly.
ZeroClass classify(const Partition& lambda, const Partition& mu, bool evaluate);
ZeroClass classify(const BoundaryCode& lambda, const Partition& mu, bool evaluate);

}  // namespace symzero
