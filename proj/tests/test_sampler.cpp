#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "symzero/errors.hpp"
#include "symzero/partition.hpp"
#include "symzero/sampler.hpp"

using namespace symzero;

TEST_CASE("p-table values") {
  CHECK(PartitionCountTable::build(0).counts() == std::vector<BigCount>{1});
  const auto table = PartitionCountTable::build(200);
  CHECK(table[5] == 7);
  CHECK(table[5] == static_cast<long>(all_partitions(5).size()));
  CHECK(table[50] == 204226);
  CHECK(to_decimal(table[100]) == "190569292");
  CHECK(to_decimal(table[200]) == "3972999029388");
  const auto expected = oracle::bounded_part_counts(200);
  for (int m = 0; m <= 200; ++m) REQUIRE(table[m] == big_from_u64(expected[static_cast<std::size_t>(m)]));
}

TEST_CASE("divisor sums") {
  const auto table = PartitionCountTable::build(12);
  CHECK(table.sigma(1) == 1);
  CHECK(table.sigma(6) == 12);
  CHECK(table.sigma(12) == 28);
}

TEST_CASE("p-table cap") {
  CHECK_THROWS_AS(PartitionCountTable::build(11, 10), ResourceLimit);
  CHECK_NOTHROW(PartitionCountTable::build(10, 10));
}

TEST_CASE("p-table cache round trip and verification") {
  const auto table = PartitionCountTable::build(120);
  std::stringstream buffer;
  table.save(buffer);
  const std::string text = buffer.str();
  CHECK(text.rfind("symzero-ptable 1 120\n", 0) == 0);

  std::istringstream in(text);
  const auto loaded = PartitionCountTable::load(in, 1000);
  CHECK(loaded.counts() == table.counts());

  std::string tampered = text;
  const std::string p50 = "\n204226\n";
  tampered.replace(tampered.find(p50), p50.size(), "\n204227\n");
  std::istringstream bad(tampered);
  CHECK_THROWS_AS(PartitionCountTable::load(bad, 1000), Error);

  std::istringstream wrong_header("ptable 1 3\n1\n1\n2\n3\n");
  CHECK_THROWS_AS(PartitionCountTable::load(wrong_header, 1000), Error);
  std::istringstream truncated("symzero-ptable 1 5\n1\n1\n2\n");
  CHECK_THROWS_AS(PartitionCountTable::load(truncated, 1000), Error);
  std::istringstream too_big("symzero-ptable 1 5000\n");
  CHECK_THROWS_AS(PartitionCountTable::load(too_big, 1000), ResourceLimit);
}

TEST_CASE("uniform_below: machine-word and big-integer paths agree") {
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 40) + 17, ~0ULL}) {
    for (std::uint64_t idx = 0; idx < 20; ++idx) {
      auto e1 = SampleStream{99, idx}.engine();
      auto e2 = SampleStream{99, idx}.engine();
      const std::uint64_t a = uniform_below(bound, e1);
      const BigInt b = uniform_below(big_from_u64(bound), e2);
      REQUIRE(a < bound);
      REQUIRE(big_from_u64(a) == b);
      REQUIRE(e1() == e2());
    }
  }
}

TEST_CASE("random_partition basics") {
  const auto table = PartitionCountTable::build(60);
  for (std::uint64_t i = 0; i < 10; ++i) CHECK(random_partition(1, SampleStream{3, i}, table) == Partition::parse("1"));
  CHECK(random_partition(0, SampleStream{3, 0}, table).empty());
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Partition a = random_partition(60, SampleStream{12345, i}, table);
    const Partition b = random_partition(60, SampleStream{12345, i}, table);
    CHECK(a.weight() == 60);
    CHECK(a == b);
  }
  CHECK_THROWS_AS(random_partition(61, SampleStream{1, 0}, table), ResourceLimit);
}

TEST_CASE("random_partition works past the machine-word range") {
  const auto table = PartitionCountTable::build(2000);
  CHECK(table.small_total(2000) == 0);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Partition p = random_partition(2000, SampleStream{7, i}, table);
    CHECK(p.weight() == 2000);
  }
}

TEST_CASE("n = 5: each partition within four standard errors of 1/7") {
  const auto table = PartitionCountTable::build(5);
  const std::uint64_t samples = 70000;
  std::map<Partition, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < samples; ++i) ++counts[random_partition(5, SampleStream{2024, i}, table)];
  REQUIRE(counts.size() == 7);
  const double p = 1.0 / 7.0;
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  for (const auto& [part, c] : counts) {
    CHECK(std::abs(static_cast<double>(c) / static_cast<double>(samples) - p) < 4 * se);
  }
}

TEST_CASE("chi-square uniformity at significance 1e-3") {
  const auto table = PartitionCountTable::build(10);
  // Upper 0.001 quantiles of chi-square with p(n) - 1 degrees of freedom.
  CHECK(oracle::chi_square(5, 100000, 11, table) < 22.4577);
  CHECK(oracle::chi_square(6, 100000, 12, table) < 29.5883);
  CHECK(oracle::chi_square(10, 100000, 13, table) < 74.7449);
}
