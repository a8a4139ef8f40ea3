#pragma once

#include <string>
#include <vector>

#include "symzero/big.hpp"
#include "symzero/sampler.hpp"

namespace symzero {

/// Exact zero counts over the whole p_n x p_n character table.
struct ScanResult {
  int n = 0;
  BigCount total_entries;
  BigCount zero_count;
  BigCount type1_count;
  BigCount type2_count;
  double elapsed_seconds = 0.0;

  std::string z(int digits = 6) const { return fixed_point_ratio(zero_count, total_entries, digits); }
  std::string z1(int digits = 6) const { return fixed_point_ratio(type1_count, total_entries, digits); }
  std::string z2(int digits = 6) const { return fixed_point_ratio(type2_count, total_entries, digits); }
  /// z_I / z rounded to `digits`; empty when the table has no zeros.
  std::string type1_share(int digits = 3) const {
    return sgn(zero_count) == 0 ? std::string{} : fixed_point_ratio(type1_count, zero_count, digits);
  }
};

/// Evaluates every entry of the character table of S_n. Columns are split
/// over `workers` threads (0 = hardware concurrency). Throws ResourceLimit
/// above `cap`.
ScanResult full_table_scan(int n, unsigned workers, int cap);
ScanResult full_table_scan(int n, unsigned workers = 0);

/// Coefficients c_t(0..n) of prod_k (1 - x^{tk})^t / (1 - x^k): the number of
/// t-core partitions of each m <= n.
struct CorePolynomial {
  int t = 1;
  std::vector<BigCount> coefficients;
};

CorePolynomial core_polynomial(int n, int t, const PartitionCountTable& table);
BigCount count_t_cores(int n, int t, const PartitionCountTable& table);
BigCount count_t_cores(int n, int t);

/// q[t] = number of partitions of n with largest part t, for t = 0..n
/// (q[0] = 0 unless n = 0).
std::vector<BigCount> count_max_part(int n);

/// |Z_I(S_n)| = sum_t q(n, t) c_t(n). Throws ResourceLimit above `cap`.
BigCount count_type1(int n, int cap);
BigCount count_type1(int n);

}  // namespace symzero
