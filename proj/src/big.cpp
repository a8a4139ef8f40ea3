#include "symzero/big.hpp"

#include <cstdlib>
#include <stdexcept>

#include "symzero/errors.hpp"
#include "symzero/limits.hpp"

namespace symzero {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw Error("not a decimal integer: '" + text + "'");
  }
  return r;
}

std::string fixed_point_ratio(const BigInt& num, const BigInt& den, int digits) {
  if (sgn(den) <= 0) throw std::invalid_argument("fixed_point_ratio: denominator must be positive");
  if (digits < 0) throw std::invalid_argument("fixed_point_ratio: negative digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled = abs(num) * scale;
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(BigInt(2 * r), den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

  std::string s = q.get_str(10);
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (sgn(num) < 0 && sgn(q) != 0) s.insert(0, 1, '-');
  return s;
}

namespace {

int env_cap(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(v, &end, 10);
  if (*end != '\0' || parsed < 0 || parsed > 100000000) return fallback;
  return static_cast<int>(parsed);
}

}  // namespace

int ptable_cap() { return env_cap("SYMZERO_PTABLE_CAP", kDefaultPTableCap); }
int scan_cap() { return env_cap("SYMZERO_SCAN_CAP", kDefaultScanCap); }
int type1_cap() { return env_cap("SYMZERO_TYPE1_CAP", kDefaultType1Cap); }

}  // namespace symzero
