#include "doctest.h"
#include "symzero/boundary_code.hpp"
#include "symzero/census.hpp"
#include "symzero/errors.hpp"
#include "symzero/partition.hpp"

using namespace symzero;

namespace {

long brute_force_cores(int n, int t) {
  long count = 0;
  for (const auto& p : all_partitions(n)) count += is_t_core(p, t);
  return count;
}

}  // namespace

TEST_CASE("fixed-point densities round half to even") {
  CHECK(fixed_point_ratio(1, 8, 2) == "0.12");
  CHECK(fixed_point_ratio(3, 8, 2) == "0.38");
  CHECK(fixed_point_ratio(5, 8, 2) == "0.62");
  CHECK(fixed_point_ratio(1, 3, 6) == "0.333333");
  CHECK(fixed_point_ratio(2, 3, 3) == "0.667");
  CHECK(fixed_point_ratio(3, 3, 3) == "1.000");
  CHECK(fixed_point_ratio(0, 7, 2) == "0.00");
  CHECK(fixed_point_ratio(7, 2, 0) == "4");
  CHECK(fixed_point_ratio(-1, 4, 1) == "-0.2");
}

TEST_CASE("full table scan examples") {
  const ScanResult one = full_table_scan(1, 1);
  CHECK(one.zero_count == 0);
  CHECK(one.total_entries == 1);
  CHECK(one.type1_share().empty());

  const ScanResult three = full_table_scan(3, 1);
  CHECK(three.total_entries == 9);
  CHECK(three.zero_count == 1);
  CHECK(three.type1_count == 1);
  CHECK(three.type1_share(3) == "1.000");

  const ScanResult four = full_table_scan(4, 2);
  CHECK(four.zero_count == 4);
  CHECK(four.type1_count == 3);
  CHECK(four.type2_count == 3);
  CHECK(four.type1_share(3) == "0.750");
  CHECK(four.z() == "0.160000");
  CHECK(four.z1() == "0.120000");

  CHECK_THROWS_AS(full_table_scan(21, 1, 20), ResourceLimit);
}

TEST_CASE("scan counts keep the chain") {
  for (int n = 1; n <= 10; ++n) {
    const ScanResult r = full_table_scan(n, 1);
    CHECK(r.type1_count <= r.type2_count);
    CHECK(r.type2_count <= r.zero_count);
    CHECK(r.zero_count <= r.total_entries);
  }
}

TEST_CASE("t-core counts") {
  const auto table = PartitionCountTable::build(40);
  for (int n = 0; n <= 12; ++n) CHECK(count_t_cores(n, n + 1, table) == table[n]);
  for (int n = 0; n <= 15; ++n) {
    int k = 0;
    while (k * (k + 1) / 2 < n) ++k;
    const bool triangular = k * (k + 1) / 2 == n;
    CHECK(count_t_cores(n, 2, table) == (triangular ? 1 : 0));
  }
  CHECK(count_t_cores(5, 3, table) == 1);

  const CorePolynomial one = core_polynomial(20, 1, table);
  CHECK(one.coefficients[0] == 1);
  for (int m = 1; m <= 20; ++m) CHECK(one.coefficients[static_cast<std::size_t>(m)] == 0);
  const CorePolynomial seven = core_polynomial(30, 7, table);
  for (int m = 0; m < 7; ++m) CHECK(seven.coefficients[static_cast<std::size_t>(m)] == table[m]);
  for (int m = 0; m <= 30; ++m) CHECK(seven.coefficients[static_cast<std::size_t>(m)] == count_t_cores(m, 7, table));
}

TEST_CASE("property: series agrees with brute-force core counts, n <= 15") {
  const auto table = PartitionCountTable::build(15);
  for (int n = 0; n <= 15; ++n) {
    for (int t = 1; t <= n + 1; ++t) REQUIRE(count_t_cores(n, t, table) == brute_force_cores(n, t));
  }
}

TEST_CASE("partitions by largest part") {
  const auto q4 = count_max_part(4);
  CHECK(q4[4] == 1);
  CHECK(q4[2] == 2);
  CHECK(q4[1] == 1);
  const auto table = PartitionCountTable::build(60);
  for (int n = 1; n <= 60; ++n) {
    const auto q = count_max_part(n);
    BigCount sum = 0;
    for (const auto& v : q) sum += v;
    REQUIRE(sum == table[n]);
    REQUIRE(q[static_cast<std::size_t>(n)] == 1);
  }
  for (int n = 1; n <= 12; ++n) {
    std::vector<long> direct(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : all_partitions(n)) ++direct[static_cast<std::size_t>(p.largest())];
    const auto q = count_max_part(n);
    for (int t = 1; t <= n; ++t) REQUIRE(q[static_cast<std::size_t>(t)] == direct[static_cast<std::size_t>(t)]);
  }
}

TEST_CASE("type-I counts") {
  CHECK(count_type1(1) == 0);
  CHECK(count_type1(4) == 3);
  CHECK_THROWS_AS(count_type1(11, 10), ResourceLimit);
  for (int n = 3; n <= 12; ++n) REQUIRE(count_type1(n) == full_table_scan(n, 1).type1_count);
}
