#include "symzero/census.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "symzero/boundary_code.hpp"
#include "symzero/character.hpp"
#include "symzero/errors.hpp"
#include "symzero/limits.hpp"
#include "symzero/parallel.hpp"
#include "symzero/partition.hpp"

namespace symzero {

ScanResult full_table_scan(int n, unsigned workers, int cap) {
  if (n < 0) throw Error("scan needs n >= 0");
  if (n > cap) {
    throw ResourceLimit("full table scan at n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                        " (set SYMZERO_SCAN_CAP to raise it)");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Partition> shapes = all_partitions(n);
  std::vector<BoundaryCode> codes;
  codes.reserve(shapes.size());
  for (const auto& p : shapes) codes.push_back(encode(p));

  struct Tally {
    std::uint64_t zero = 0, type1 = 0, type2 = 0;
  };
  const unsigned nworkers = resolve_workers(workers);
  std::vector<Tally> tallies(nworkers);
  parallel_blocks(shapes.size(), nworkers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Tally& t = tallies[w];
    for (std::uint64_t col = begin; col < end; ++col) {
      const Partition& mu = shapes[col];
      for (const auto& lambda : codes) {
        const ZeroClass c = classify(lambda, mu, true);
        t.zero += c.is_zero;
        t.type1 += c.is_type1;
        t.type2 += c.is_type2;
      }
    }
  });

  ScanResult r;
  r.n = n;
  r.total_entries = BigCount(static_cast<unsigned long>(shapes.size())) * static_cast<unsigned long>(shapes.size());
  r.zero_count = 0;
  r.type1_count = 0;
  r.type2_count = 0;
  for (const Tally& t : tallies) {
    r.zero_count += big_from_u64(t.zero);
    r.type1_count += big_from_u64(t.type1);
    r.type2_count += big_from_u64(t.type2);
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ScanResult full_table_scan(int n, unsigned workers) { return full_table_scan(n, workers, scan_cap()); }

namespace {

// prod_{k>=1} (1 - y^k) up to degree `degree`, from the pentagonal-number
// theorem: the only nonzero coefficients sit at i(3i -+ 1)/2 with sign (-1)^i.
std::vector<std::pair<int, int>> euler_product_terms(int degree) {
  std::vector<std::pair<int, int>> terms;
  for (int i = 1;; ++i) {
    const int g1 = i * (3 * i - 1) / 2;
    if (g1 > degree) break;
    const int sign = (i % 2 == 0) ? 1 : -1;
    terms.emplace_back(g1, sign);
    const int g2 = i * (3 * i + 1) / 2;
    if (g2 <= degree) terms.emplace_back(g2, sign);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

// Coefficients of (prod_k (1 - y^k))^t up to `degree`, via the power-series
// power recurrence j g_j = sum_k ((t + 1) k - j) f_k g_{j-k} with f_0 = 1.
std::vector<BigInt> euler_product_power(int degree, int t) {
  const auto f = euler_product_terms(degree);
  std::vector<BigInt> g(static_cast<std::size_t>(degree) + 1);
  g[0] = 1;
  BigInt acc;
  for (int j = 1; j <= degree; ++j) {
    acc = 0;
    for (const auto& [k, sign] : f) {
      if (k > j) break;
      const long factor = static_cast<long>(t + 1) * k - j;
      if (factor == 0) continue;
      if (sign > 0) {
        acc += g[static_cast<std::size_t>(j - k)] * factor;
      } else {
        acc -= g[static_cast<std::size_t>(j - k)] * factor;
      }
    }
    mpz_divexact_ui(g[static_cast<std::size_t>(j)].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return g;
}

void check_core_args(int n, int t, const PartitionCountTable& table) {
  if (n < 0) throw Error("core counting needs n >= 0");
  if (t < 1) throw Error("core order must be positive");
  if (n > table.max_n()) throw ResourceLimit("p-table too small for n = " + std::to_string(n));
}

}  // namespace

CorePolynomial core_polynomial(int n, int t, const PartitionCountTable& table) {
  check_core_args(n, t, table);
  const auto g = euler_product_power(n / t, t);
  CorePolynomial poly;
  poly.t = t;
  poly.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int m = 0; m <= n; ++m) {
    BigCount& c = poly.coefficients[static_cast<std::size_t>(m)];
    for (int j = 0; t * j <= m; ++j) c += g[static_cast<std::size_t>(j)] * table[m - t * j];
  }
  return poly;
}

BigCount count_t_cores(int n, int t, const PartitionCountTable& table) {
  check_core_args(n, t, table);
  if (t > n) return table[n];
  const auto g = euler_product_power(n / t, t);
  BigCount c = 0;
  for (int j = 0; t * j <= n; ++j) c += g[static_cast<std::size_t>(j)] * table[n - t * j];
  return c;
}

BigCount count_t_cores(int n, int t) {
  const auto table = PartitionCountTable::build(std::max(n, 0));
  return count_t_cores(n, t, table);
}

std::vector<BigCount> count_max_part(int n) {
  if (n < 0) throw Error("count_max_part needs n >= 0");
  std::vector<BigCount> q(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    q[0] = 1;
    return q;
  }
  // bounded[m] = number of partitions of m with all parts <= t, for the
  // current t; then q(n, t) = bounded_t[n - t].
  std::vector<BigCount> bounded(static_cast<std::size_t>(n) + 1, 0);
  bounded[0] = 1;
  for (int t = 1; t <= n; ++t) {
    for (int m = t; m <= n - t; ++m) bounded[static_cast<std::size_t>(m)] += bounded[static_cast<std::size_t>(m - t)];
    q[static_cast<std::size_t>(t)] = bounded[static_cast<std::size_t>(n - t)];
  }
  return q;
}

BigCount count_type1(int n, int cap) {
  if (n < 1) throw Error("count_type1 needs n >= 1");
  if (n > cap) {
    throw ResourceLimit("type-I count at n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                        " (set SYMZERO_TYPE1_CAP to raise it)");
  }
  const auto table = PartitionCountTable::build(n, std::max(n, ptable_cap()));
  const auto q = count_max_part(n);
  BigCount total = 0;
  for (int t = 1; t <= n; ++t) total += q[static_cast<std::size_t>(t)] * count_t_cores(n, t, table);
  return total;
}

BigCount count_type1(int n) { return count_type1(n, type1_cap()); }

}  // namespace symzero
