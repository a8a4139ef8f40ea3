#include "doctest.h"
#include "oracles.hpp"
#include "symzero/boundary_code.hpp"
#include "symzero/character.hpp"
#include "symzero/errors.hpp"
#include "symzero/partition.hpp"

using namespace symzero;

namespace {

Partition P(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

}  // namespace

TEST_CASE("character examples") {
  for (const auto& mu : all_partitions(6)) CHECK(character(P({6}), mu) == 1);
  CHECK(character(P({3, 1}), P({2, 2})) == -1);
  CHECK(character(P({2, 2}), P({2, 1, 1})) == 0);
  CHECK(character(P({}), P({})) == 1);
  CHECK(character(P({1}), P({1})) == 1);
  // A known entry of S_5: chi_(3,1,1) on a 5-cycle is 1, on (3,1,1) is 0.
  CHECK(character(P({3, 1, 1}), P({5})) == 1);
  CHECK(character(P({3, 1, 1}), P({3, 1, 1})) == 0);
  CHECK(character(P({3, 1, 1}), P({1, 1, 1, 1, 1})) == 6);
}

TEST_CASE("character rejects mismatched weights") {
  CHECK_THROWS_AS(character(P({3, 1}), P({3})), WeightMismatch);
  CHECK_THROWS_AS(classify(P({3, 1}), P({3}), true), WeightMismatch);
  CHECK_THROWS_AS(classify(P({3, 1}), P({3}), false), WeightMismatch);
}

TEST_CASE("sign character") {
  for (int n = 1; n <= 10; ++n) {
    const Partition column(P(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (const auto& mu : all_partitions(n)) {
      const int expected = ((n - static_cast<int>(mu.length())) % 2 == 0) ? 1 : -1;
      REQUIRE(character(column, mu) == expected);
    }
  }
}

TEST_CASE("property: value on the identity class is the dimension, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    const Partition identity = P(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : all_partitions(n)) REQUIRE(character(lambda, identity) == dimension(lambda));
  }
}

TEST_CASE("property: column orthogonality gives centralizer sizes, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const auto shapes = all_partitions(n);
    for (const auto& mu : shapes) {
      BigInt sum = 0;
      for (const auto& lambda : shapes) {
        const BigInt v = character(lambda, mu);
        sum += v * v;
      }
      REQUIRE(sum == oracle::centralizer_size(mu));
    }
  }
}

TEST_CASE("property: agrees with the parts-list recursion, n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    const auto shapes = all_partitions(n);
    for (const auto& lambda : shapes) {
      const std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
      for (const auto& mu : shapes) REQUIRE(character(lambda, mu) == oracle::naive_character(parts, mu.parts()));
    }
  }
}

TEST_CASE("property: bag keys keep a common weight while peeling") {
  const Partition lambda = P({6, 5, 3, 2, 1, 1});
  const Partition mu = P({5, 4, 3, 3, 2, 1});
  TermBag bag(encode(lambda), lambda.weight());
  int remaining = lambda.weight();
  for (int part : mu.parts()) {
    bag = bag.peel(part);
    remaining -= part;
    CHECK(bag.weight() == remaining);
    for (const auto& [shape, coefficient] : bag.terms()) {
      REQUIRE(shape.is_canonical());
      REQUIRE(sgn(coefficient) != 0);
      REQUIRE(decode(shape).weight() == remaining);
    }
  }
  CHECK(bag.finish() == character(lambda, mu));
}

TEST_CASE("classify examples") {
  const ZeroClass a = classify(P({2, 2}), P({4}), true);
  CHECK(a.is_zero);
  CHECK(a.is_type1);
  CHECK(a.is_type2);

  const ZeroClass b = classify(P({2, 2}), P({2, 1, 1}), true);
  CHECK(b.is_zero);
  CHECK_FALSE(b.is_type1);
  CHECK_FALSE(b.is_type2);
  CHECK(b.evaluated);

  const ZeroClass c = classify(P({4}), P({2, 2}), true);
  CHECK_FALSE(c.is_zero);

  // Without evaluation, only the type-II lower bound is reported.
  const ZeroClass d = classify(P({2, 2}), P({2, 1, 1}), false);
  CHECK_FALSE(d.is_zero);
  CHECK_FALSE(d.evaluated);

  // (3,2,1) has hooks {5,3,3,1,1,1}: a 2-core but not a 3-core.
  const ZeroClass e = classify(P({3, 2, 1}), P({3, 2, 1}), true);
  CHECK_FALSE(e.is_type1);
  CHECK(e.is_type2);
  CHECK(e.is_zero);
}

TEST_CASE("property: type soundness and chain, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const auto shapes = all_partitions(n);
    for (const auto& lambda : shapes) {
      for (const auto& mu : shapes) {
        const ZeroClass lazy = classify(lambda, mu, false);
        const ZeroClass full = classify(lambda, mu, true);
        REQUIRE(lazy.is_type1 == full.is_type1);
        REQUIRE(lazy.is_type2 == full.is_type2);
        REQUIRE((!full.is_type1 || full.is_type2));
        REQUIRE((!full.is_type2 || full.is_zero));
        REQUIRE(full.is_zero == (sgn(character(lambda, mu)) == 0));
        if (full.is_type2) REQUIRE(sgn(character(lambda, mu)) == 0);
      }
    }
  }
}
