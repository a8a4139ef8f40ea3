#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symzero {

/// Arbitrary-precision integer used for character values and counts.
using BigInt = mpz_class;
using CharValue = BigInt;
using BigCount = BigInt;

std::string to_decimal(const BigInt& value);
BigInt from_decimal(const std::string& text);

/// num/den as a fixed-point decimal with `digits` fractional digits, rounded
/// half to even. Requires den > 0. Output never depends on the locale.
std::string fixed_point_ratio(const BigInt& num, const BigInt& den, int digits);

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace symzero
