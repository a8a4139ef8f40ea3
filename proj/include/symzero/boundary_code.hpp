#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symzero/big.hpp"
#include "symzero/partition.hpp"

namespace symzero {

/// Boundary word of a Young diagram, walked from the lower-left corner to the
/// upper-right: 1 for a horizontal edge, 0 for a vertical edge. Index 0 is the
/// first edge of the walk, which is the most significant digit of the usual
/// binary literal, so (6,5,3,2,1,1) is 0b100101011010.
///
/// Canonical codes start with 1 and end with 0; the empty code encodes the
/// empty partition. Equality and hashing compare bits exactly, so callers that
/// use codes as keys must keep them canonical.
class BoundaryCode {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BoundaryCode() = default;

  /// Reads a walk-order bit string, optionally prefixed "0b". No normalization.
  static BoundaryCode parse(std::string_view text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return test(i); }

  void push_back(bool bit);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count_ones() const;
  /// Number of 1-bits at indices in [first, last).
  std::size_t count_ones(std::size_t first, std::size_t last) const;

  /// 64 bits starting at `pos`; positions past the end read as 0.
  Word window(std::size_t pos) const;

  bool is_canonical() const;
  /// Strips 0-bits before the first 1-bit and 1-bits after the last 0-bit.
  void normalize();
  BoundaryCode normalized() const {
    BoundaryCode c = *this;
    c.normalize();
    return c;
  }

  /// Reverse the walk and complement every bit: the code of the conjugate.
  BoundaryCode conjugate() const;

  /// Bits in walk order, with a "0b" prefix when requested.
  std::string to_string(bool prefix = true) const;

  std::size_t hash() const;

  friend bool operator==(const BoundaryCode& a, const BoundaryCode& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  BoundaryCode slice(std::size_t first, std::size_t last) const;

  // Bit i lives in words_[i / 64] at position i % 64. Bits past size_ are 0.
  boost::container::small_vector<Word, 2> words_;
  std::size_t size_ = 0;
};

struct BoundaryCodeHash {
  std::size_t operator()(const BoundaryCode& c) const { return c.hash(); }
};

BoundaryCode encode(const Partition& lambda);

/// Normalizes, then reads off the rows: the k-th row from the bottom has as
/// many cells as there are 1-bits before the k-th 0-bit.
Partition decode(const BoundaryCode& code);

/// Hook lengths as { b - a : bits[a] = 1, bits[b] = 0, a < b }, decreasing.
HookMultiset hook_lengths(const BoundaryCode& code);

/// dimension() computed from the code's hook lengths.
BigCount dimension(const BoundaryCode& code);

/// Calls visit(a) for each index a with bits[a] = 1 and bits[a + t] = 0, in
/// ascending order. Stops early when visit returns false.
template <class Visitor>
void for_each_hook_start(const BoundaryCode& code, std::size_t t, Visitor&& visit) {
  using Word = BoundaryCode::Word;
  constexpr std::size_t W = BoundaryCode::kWordBits;
  if (t == 0 || t >= code.size()) return;
  const std::size_t limit = code.size() - t;  // a < limit
  for (std::size_t base = 0; base < limit; base += W) {
    Word candidates = code.window(base) & ~code.window(base + t);
    if (limit - base < W) candidates &= (Word{1} << (limit - base)) - 1;
    while (candidates != 0) {
      const std::size_t a = base + static_cast<std::size_t>(std::countr_zero(candidates));
      if (!visit(a)) return;
      candidates &= candidates - 1;
    }
  }
}

/// True iff no rim hook of size t can be removed; equivalently no hook length
/// is divisible by t.
bool is_t_core(const BoundaryCode& code, int t);
bool is_t_core(const Partition& lambda, int t);

/// (-1)^(number of 0-bits strictly between a and a + t) as +1 / -1.
int rim_hook_sign(const BoundaryCode& code, std::size_t a, std::size_t t);

/// Calls visit(shape, sign) for every rim hook of size t, ordered by the index
/// of the flipped 1-bit. `shape` is canonical.
template <class Visitor>
void for_each_rim_hook(const BoundaryCode& code, int t, Visitor&& visit) {
  if (t < 1) return;
  const auto ut = static_cast<std::size_t>(t);
  for_each_hook_start(code, ut, [&](std::size_t a) {
    const int sign = rim_hook_sign(code, a, ut);
    BoundaryCode shape = code;
    shape.flip(a);
    shape.flip(a + ut);
    if (a == 0 || a + ut + 1 == code.size()) shape.normalize();
    visit(std::move(shape), sign);
    return true;
  });
}

struct RimHookRemoval {
  BoundaryCode shape;
  int sign;
};

std::vector<RimHookRemoval> rim_hook_removals(const BoundaryCode& code, int t);

}  // namespace symzero
