#include "symzero/boundary_code.hpp"

#include <algorithm>
#include <functional>

#include "symzero/errors.hpp"

namespace symzero {

BoundaryCode BoundaryCode::parse(std::string_view text) {
  if (text.starts_with("0b") || text.starts_with("0B")) text.remove_prefix(2);
  BoundaryCode c;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw Error("not a bit string: '" + std::string(text) + "'");
    c.push_back(ch == '1');
  }
  return c;
}

void BoundaryCode::push_back(bool bit) {
  if (size_ % kWordBits == 0) words_.push_back(0);
  if (bit) words_.back() |= Word{1} << (size_ % kWordBits);
  ++size_;
}

std::size_t BoundaryCode::count_ones() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BoundaryCode::count_ones(std::size_t first, std::size_t last) const {
  std::size_t total = 0;
  while (first < last) {
    const std::size_t span = std::min(last - first, kWordBits);
    Word w = window(first);
    if (span < kWordBits) w &= (Word{1} << span) - 1;
    total += static_cast<std::size_t>(std::popcount(w));
    first += span;
  }
  return total;
}

BoundaryCode::Word BoundaryCode::window(std::size_t pos) const {
  const std::size_t idx = pos / kWordBits;
  const std::size_t off = pos % kWordBits;
  if (idx >= words_.size()) return 0;
  Word lo = words_[idx] >> off;
  if (off != 0 && idx + 1 < words_.size()) lo |= words_[idx + 1] << (kWordBits - off);
  return lo;
}

bool BoundaryCode::is_canonical() const {
  if (size_ == 0) return true;
  return test(0) && !test(size_ - 1);
}

BoundaryCode BoundaryCode::slice(std::size_t first, std::size_t last) const {
  BoundaryCode out;
  if (first >= last) return out;
  out.size_ = last - first;
  const std::size_t nwords = (out.size_ + kWordBits - 1) / kWordBits;
  out.words_.resize(nwords);
  for (std::size_t w = 0; w < nwords; ++w) out.words_[w] = window(first + w * kWordBits);
  const std::size_t tail = out.size_ % kWordBits;
  if (tail != 0) out.words_.back() &= (Word{1} << tail) - 1;
  return out;
}

void BoundaryCode::normalize() {
  if (is_canonical()) return;
  // First 1-bit.
  std::size_t first = size_;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      first = w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      break;
    }
  }
  // Last 0-bit.
  std::size_t last = 0;
  bool found = false;
  for (std::size_t w = words_.size(); w-- > 0;) {
    Word zeros = ~words_[w];
    const std::size_t valid = std::min(kWordBits, size_ - w * kWordBits);
    if (valid < kWordBits) zeros &= (Word{1} << valid) - 1;
    if (zeros != 0) {
      last = w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(zeros)));
      found = true;
      break;
    }
  }
  if (first >= size_ || !found || last < first) {
    *this = BoundaryCode{};
    return;
  }
  *this = slice(first, last + 1);
}

BoundaryCode BoundaryCode::conjugate() const {
  BoundaryCode out;
  for (std::size_t i = size_; i-- > 0;) out.push_back(!test(i));
  return out;
}

std::string BoundaryCode::to_string(bool prefix) const {
  std::string s = prefix ? "0b" : "";
  s.reserve(s.size() + size_);
  for (std::size_t i = 0; i < size_; ++i) s += test(i) ? '1' : '0';
  return s;
}

std::size_t BoundaryCode::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ size_;
  for (Word w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

BoundaryCode encode(const Partition& lambda) {
  BoundaryCode c;
  int prev = 0;
  // Rows from the bottom: step right to the row's length, then up one.
  for (std::size_t k = lambda.length(); k-- > 0;) {
    for (int j = prev; j < lambda[k]; ++j) c.push_back(true);
    c.push_back(false);
    prev = lambda[k];
  }
  return c;
}

Partition decode(const BoundaryCode& raw) {
  const BoundaryCode code = raw.normalized();
  std::vector<int> rows_from_bottom;
  int ones = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i]) {
      ++ones;
    } else {
      rows_from_bottom.push_back(ones);
    }
  }
  std::reverse(rows_from_bottom.begin(), rows_from_bottom.end());
  return Partition::from_parts(std::move(rows_from_bottom));
}

HookMultiset hook_lengths(const BoundaryCode& code) {
  HookMultiset hooks;
  std::vector<int> ones;
  for (std::size_t b = 0; b < code.size(); ++b) {
    if (code[b]) {
      ones.push_back(static_cast<int>(b));
    } else {
      for (int a : ones) hooks.push_back(static_cast<int>(b) - a);
    }
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>{});
  return hooks;
}

BigCount dimension(const BoundaryCode& code) {
  const HookMultiset hooks = hook_lengths(code);
  BigCount numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(hooks.size()));
  BigCount denominator = 1;
  std::uint64_t chunk = 1;
  for (int h : hooks) {
    const auto uh = static_cast<std::uint64_t>(h);
    if (chunk > (~std::uint64_t{0}) / uh) {
      denominator *= static_cast<unsigned long>(chunk);
      chunk = 1;
    }
    chunk *= uh;
  }
  denominator *= static_cast<unsigned long>(chunk);
  BigCount result;
  mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return result;
}

bool is_t_core(const BoundaryCode& code, int t) {
  if (t < 1) throw Error("core order must be positive");
  bool core = true;
  for_each_hook_start(code, static_cast<std::size_t>(t), [&](std::size_t) {
    core = false;
    return false;
  });
  return core;
}

bool is_t_core(const Partition& lambda, int t) { return is_t_core(encode(lambda), t); }

int rim_hook_sign(const BoundaryCode& code, std::size_t a, std::size_t t) {
  const std::size_t ones = code.count_ones(a + 1, a + t);
  const std::size_t zeros = (t - 1) - ones;
  return (zeros % 2 == 0) ? 1 : -1;
}

std::vector<RimHookRemoval> rim_hook_removals(const BoundaryCode& code, int t) {
  std::vector<RimHookRemoval> out;
  for_each_rim_hook(code, t, [&](BoundaryCode&& shape, int sign) {
    out.push_back({std::move(shape), sign});
  });
  return out;
}

}  // namespace symzero
