#include "symzero/sampler.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "symzero/errors.hpp"
#include "symzero/limits.hpp"

namespace symzero {

namespace {

std::vector<BigCount> pentagonal_counts(int max_n) {
  std::vector<BigCount> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (int m = 1; m <= max_n; ++m) {
    BigCount acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const bool add = (k % 2) == 1;
      const BigCount& a = p[static_cast<std::size_t>(m - g1)];
      if (add) acc += a; else acc -= a;
      if (g2 <= m) {
        const BigCount& b = p[static_cast<std::size_t>(m - g2)];
        if (add) acc += b; else acc -= b;
      }
    }
    p[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return p;
}

// Divisors of k in ascending order.
void divisors(std::uint64_t k, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t small = 0;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(small), d);
      ++small;
      if (d * d != k) out.insert(out.begin() + static_cast<std::ptrdiff_t>(small), k / d);
    }
  }
}

}  // namespace

PartitionCountTable::PartitionCountTable(std::vector<BigCount> counts) : counts_(std::move(counts)) {
  const std::size_t top = counts_.size() - 1;
  sigma_.assign(top + 1, 0);
  for (std::size_t d = 1; d <= top; ++d) {
    for (std::size_t k = d; k <= top; k += d) sigma_[k] += d;
  }
  for (std::size_t m = 0; m <= top; ++m) {
    if (!mpz_fits_ulong_p(counts_[m].get_mpz_t())) break;
    const unsigned __int128 total =
        static_cast<unsigned __int128>(counts_[m].get_ui()) * static_cast<unsigned __int128>(m);
    if (total >> 64 != 0) break;
    small_counts_.push_back(counts_[m].get_ui());
    small_totals_.push_back(static_cast<std::uint64_t>(total));
  }
}

PartitionCountTable PartitionCountTable::build(int max_n, int cap) {
  if (max_n < 0) throw Error("p-table size must be nonnegative");
  if (max_n > cap) {
    throw ResourceLimit("p-table up to " + std::to_string(max_n) + " exceeds the cap of " + std::to_string(cap) +
                        " (set SYMZERO_PTABLE_CAP to raise it)");
  }
  return PartitionCountTable(pentagonal_counts(max_n));
}

PartitionCountTable PartitionCountTable::build(int max_n) { return build(max_n, ptable_cap()); }

void PartitionCountTable::save(std::ostream& out) const {
  out << "symzero-ptable 1 " << max_n() << '\n';
  for (const auto& c : counts_) out << c.get_str(10) << '\n';
}

PartitionCountTable PartitionCountTable::load(std::istream& in, int cap) {
  std::string magic;
  int version = 0;
  long max_n = -1;
  std::string header;
  if (!std::getline(in, header)) throw Error("p-table cache: missing header");
  std::istringstream hs(header);
  if (!(hs >> magic >> version >> max_n) || magic != "symzero-ptable" || version != 1 || max_n < 0) {
    throw Error("p-table cache: bad header '" + header + "'");
  }
  if (max_n > cap) throw ResourceLimit("p-table cache holds " + std::to_string(max_n) + " entries, above the cap");
  std::vector<BigCount> counts;
  counts.reserve(static_cast<std::size_t>(max_n) + 1);
  std::string line;
  for (long m = 0; m <= max_n; ++m) {
    if (!std::getline(in, line)) throw Error("p-table cache: truncated at entry " + std::to_string(m));
    counts.push_back(from_decimal(line));
  }
  const int check = static_cast<int>(std::min<long>(max_n, 100));
  const auto fresh = pentagonal_counts(check);
  for (int m : {50, 100}) {
    if (m <= check && fresh[static_cast<std::size_t>(m)] != counts[static_cast<std::size_t>(m)]) {
      throw Error("p-table cache: p(" + std::to_string(m) + ") does not match recomputation");
    }
  }
  if (counts[0] != 1) throw Error("p-table cache: p(0) must be 1");
  return PartitionCountTable(std::move(counts));
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t ordinal) {
  return mix64(mix64(master_seed) ^ mix64(ordinal ^ 0xD1B54A32D192ED03ULL));
}

SampleStream::Engine SampleStream::engine() const { return Engine(derive_seed(master_seed, index)); }

std::uint64_t uniform_below(std::uint64_t bound, SampleStream::Engine& engine) {
  if (bound == 0) throw Error("uniform_below: empty range");
  const int bits = std::bit_width(bound);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  while (true) {
    const std::uint64_t x = engine() & mask;
    if (x < bound) return x;
  }
}

BigInt uniform_below(const BigInt& bound, SampleStream::Engine& engine) {
  if (sgn(bound) <= 0) throw Error("uniform_below: empty range");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nwords = (bits + 63) / 64;
  const std::size_t top_bits = bits - (nwords - 1) * 64;
  const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  std::vector<std::uint64_t> words(nwords);
  BigInt x;
  while (true) {
    for (auto& w : words) w = engine();
    words.back() &= top_mask;
    mpz_import(x.get_mpz_t(), nwords, -1, sizeof(std::uint64_t), 0, 0, words.data());
    if (x < bound) return x;
  }
}

Partition random_partition(int n, SampleStream::Engine& engine, const PartitionCountTable& table) {
  if (n < 0) throw Error("cannot sample a partition of a negative integer");
  if (n > table.max_n()) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the p-table (max " + std::to_string(table.max_n()) +
                        ")");
  }
  std::vector<int> parts;
  std::vector<std::uint64_t> divs;
  BigInt z, weight;
  int m = n;
  // Grouping the (d, j) pairs by k = d * j: P(k) = sigma(k) p(m - k) / (m p(m)),
  // then P(d | k) = d / sigma(k). The product is the (d, j) weight above.
  while (m > 0) {
    int k = 1;
    if (const std::uint64_t total = table.small_total(m); total != 0) {
      std::uint64_t r = uniform_below(total, engine);
      for (;; ++k) {
        const std::uint64_t w = table.sigma(k) * table.small_count(m - k);
        if (r < w) break;
        r -= w;
      }
    } else {
      z = table[m] * static_cast<unsigned long>(m);
      z = uniform_below(z, engine);
      for (;; ++k) {
        weight = table[m - k] * static_cast<unsigned long>(table.sigma(k));
        if (z < weight) break;
        z -= weight;
      }
    }
    std::uint64_t u = uniform_below(table.sigma(k), engine);
    divisors(static_cast<std::uint64_t>(k), divs);
    std::uint64_t d = 0;
    for (std::uint64_t candidate : divs) {
      if (u < candidate) {
        d = candidate;
        break;
      }
      u -= candidate;
    }
    const int part = static_cast<int>(d);
    parts.insert(parts.end(), static_cast<std::size_t>(k / part), part);
    m -= k;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition::from_parts(std::move(parts));
}

Partition random_partition(int n, const SampleStream& stream, const PartitionCountTable& table) {
  auto engine = stream.engine();
  return random_partition(n, engine, table);
}

}  // namespace symzero
