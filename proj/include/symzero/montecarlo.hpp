#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "symzero/sampler.hpp"

namespace symzero {

enum class Mode { TypesOnly, FullEval };

std::string_view to_string(Mode mode);
/// "types-only" or "full-eval"; throws InvalidMode otherwise.
Mode parse_mode(std::string_view text);
/// Full evaluation up to n = 300, type tests only above.
Mode default_mode(int n);

struct EstimateRequest {
  std::vector<int> n_values;
  std::uint64_t samples_per_n = 1;
  std::uint64_t master_seed = 0;
  std::optional<Mode> mode;  // nullopt: default_mode(n) for each n
  unsigned workers = 0;      // 0: hardware concurrency
};

struct DensityEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  Mode mode = Mode::TypesOnly;
  std::optional<std::uint64_t> count_zero;  // full-eval only
  std::uint64_t count_type1 = 0;
  std::uint64_t count_type2 = 0;
  std::uint64_t master_seed = 0;
  std::string rng_name{kRngName};
  double elapsed_seconds = 0.0;
  std::optional<std::string> error;  // set on sweep rows that failed

  std::optional<double> z_hat() const;
  double z1_hat() const;
  double z2_hat() const;
};

/// Draws `samples` pairs (lambda, mu) independently and uniformly from P_n x
/// P_n; sample i uses streams (seed, 2i) for lambda and (seed, 2i + 1) for
/// mu. Counts do not depend on `workers`.
DensityEstimate estimate(int n, std::uint64_t samples, std::uint64_t seed, Mode mode,
                         const PartitionCountTable& table, unsigned workers = 0);

/// Runs estimate() for each n with seed derive_seed(master_seed, n), handing
/// each row to `sink` as soon as it is done. A failing n produces a row with
/// `error` set and the sweep carries on.
void sweep(const EstimateRequest& request, const PartitionCountTable& table,
           const std::function<void(const DensityEstimate&)>& sink);
std::vector<DensityEstimate> sweep(const EstimateRequest& request, const PartitionCountTable& table);

/// CSV header and rows:
/// n,samples,mode,count_zero,count_type1,count_type2,z_hat,z1_hat,z2_hat,master_seed,rng_name,elapsed_seconds
/// With `with_difference` a trailing z2_minus_z1 column is appended.
std::string csv_header(bool with_difference = false);
std::string csv_row(const DensityEstimate& row, bool with_difference = false);

/// count / samples with six decimals, exact and rounded half to even.
std::string format_density(std::uint64_t count, std::uint64_t samples);

nlohmann::json to_json(const EstimateRequest& request);

}  // namespace symzero
