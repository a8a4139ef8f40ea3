#include "symzero/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "symzero/errors.hpp"

namespace symzero {

Partition Partition::from_parts(std::vector<int> parts) {
  Partition p;
  long total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1) {
      throw NonPositivePart("part " + std::to_string(k + 1) + " is " + std::to_string(parts[k]) +
                            "; parts must be positive");
    }
    if (k > 0 && parts[k] > parts[k - 1]) {
      throw NotWeaklyDecreasing("parts must be weakly decreasing: " + std::to_string(parts[k - 1]) +
                                " is followed by " + std::to_string(parts[k]));
    }
    total += parts[k];
    if (total > 1'000'000'000L) throw InvalidPartition("partition weight too large");
  }
  p.parts_ = std::move(parts);
  p.weight_ = static_cast<int>(total);
  return p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "0") return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw InvalidPartition("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return from_parts(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  Partition p;
  p.parts_ = std::move(conj);
  p.weight_ = weight_;
  return p;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s;
}

HookMultiset hook_lengths(const Partition& lambda) {
  HookMultiset hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.weight()));
  const std::size_t rows = lambda.length();
  for (std::size_t i = 0; i < rows; ++i) {
    for (int j = 1; j <= lambda[i]; ++j) {
      int below = 0;
      for (std::size_t s = i; s < rows; ++s) {
        if (lambda[s] >= j) ++below;
      }
      hooks.push_back(lambda[i] - j + below);
    }
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>{});
  return hooks;
}

BigCount dimension(const Partition& lambda) {
  BigCount numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(lambda.weight()));
  BigCount denominator = 1;
  for (int h : hook_lengths(lambda)) denominator *= static_cast<unsigned long>(h);
  BigCount result;
  mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return result;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor rule on the reverse-lexicographic order.
  std::vector<int> a{n};
  while (true) {
    out.push_back(Partition::from_parts(a));
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == 1) --k;
    if (k == 0) break;
    const int ones = static_cast<int>(a.size() - k);
    int rem = ones + 1;
    const int v = --a[k - 1];
    a.resize(k);
    while (rem > 0) {
      const int take = std::min(v, rem);
      a.push_back(take);
      rem -= take;
    }
  }
  return out;
}

}  // namespace symzero
