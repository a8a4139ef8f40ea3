#include "symzero/montecarlo.hpp"

#include <chrono>
#include <charconv>

#include "symzero/boundary_code.hpp"
#include "symzero/character.hpp"
#include "symzero/errors.hpp"
#include "symzero/parallel.hpp"

namespace symzero {

std::string_view to_string(Mode mode) { return mode == Mode::FullEval ? "full-eval" : "types-only"; }

Mode parse_mode(std::string_view text) {
  if (text == "full-eval") return Mode::FullEval;
  if (text == "types-only") return Mode::TypesOnly;
  throw InvalidMode("unknown mode '" + std::string(text) + "' (expected types-only or full-eval)");
}

Mode default_mode(int n) { return n <= 300 ? Mode::FullEval : Mode::TypesOnly; }

std::optional<double> DensityEstimate::z_hat() const {
  if (!count_zero || samples == 0) return std::nullopt;
  return static_cast<double>(*count_zero) / static_cast<double>(samples);
}
double DensityEstimate::z1_hat() const {
  return samples == 0 ? 0.0 : static_cast<double>(count_type1) / static_cast<double>(samples);
}
double DensityEstimate::z2_hat() const {
  return samples == 0 ? 0.0 : static_cast<double>(count_type2) / static_cast<double>(samples);
}

DensityEstimate estimate(int n, std::uint64_t samples, std::uint64_t seed, Mode mode,
                         const PartitionCountTable& table, unsigned workers) {
  if (n < 1) throw Error("estimate needs n >= 1");
  if (samples < 1) throw Error("estimate needs at least one sample");
  if (n > table.max_n()) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the p-table (max " + std::to_string(table.max_n()) +
                        ")");
  }
  const auto start = std::chrono::steady_clock::now();
  const bool evaluate = mode == Mode::FullEval;

  struct Tally {
    std::uint64_t zero = 0, type1 = 0, type2 = 0;
  };
  const unsigned nworkers = resolve_workers(workers);
  std::vector<Tally> tallies(nworkers);
  parallel_blocks(samples, nworkers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Partition lambda = random_partition(n, SampleStream{seed, 2 * i}, table);
      const Partition mu = random_partition(n, SampleStream{seed, 2 * i + 1}, table);
      const ZeroClass c = classify(encode(lambda), mu, evaluate);
      t.zero += c.is_zero;
      t.type1 += c.is_type1;
      t.type2 += c.is_type2;
    }
    tallies[w] = t;
  });

  DensityEstimate est;
  est.n = n;
  est.samples = samples;
  est.mode = mode;
  est.master_seed = seed;
  std::uint64_t zero = 0;
  for (const Tally& t : tallies) {
    zero += t.zero;
    est.count_type1 += t.type1;
    est.count_type2 += t.type2;
  }
  if (evaluate) est.count_zero = zero;
  est.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

void sweep(const EstimateRequest& request, const PartitionCountTable& table,
           const std::function<void(const DensityEstimate&)>& sink) {
  for (int n : request.n_values) {
    const Mode mode = request.mode.value_or(default_mode(n));
    DensityEstimate row;
    try {
      row = estimate(n, request.samples_per_n, derive_seed(request.master_seed, static_cast<std::uint64_t>(n)), mode,
                     table, request.workers);
    } catch (const Error& e) {
      row = DensityEstimate{};
      row.n = n;
      row.samples = request.samples_per_n;
      row.mode = mode;
      row.error = e.what();
    }
    row.master_seed = request.master_seed;
    sink(row);
  }
}

std::vector<DensityEstimate> sweep(const EstimateRequest& request, const PartitionCountTable& table) {
  std::vector<DensityEstimate> rows;
  sweep(request, table, [&](const DensityEstimate& r) { rows.push_back(r); });
  return rows;
}

std::string format_density(std::uint64_t count, std::uint64_t samples) {
  return fixed_point_ratio(big_from_u64(count), big_from_u64(samples), 6);
}

std::string csv_header(bool with_difference) {
  std::string h =
      "n,samples,mode,count_zero,count_type1,count_type2,z_hat,z1_hat,z2_hat,master_seed,rng_name,elapsed_seconds";
  if (with_difference) h += ",z2_minus_z1";
  return h;
}

std::string csv_row(const DensityEstimate& row, bool with_difference) {
  std::string s = std::to_string(row.n) + ',' + std::to_string(row.samples) + ',';
  if (row.error) {
    // Error marker: everything after the mode column is left empty.
    s += "error,,,,,,," + std::to_string(row.master_seed) + ",,";
    if (with_difference) s += ',';
    return s;
  }
  s += std::string(to_string(row.mode)) + ',';
  s += row.count_zero ? std::to_string(*row.count_zero) : std::string{};
  s += ',' + std::to_string(row.count_type1) + ',' + std::to_string(row.count_type2) + ',';
  s += row.count_zero ? format_density(*row.count_zero, row.samples) : std::string{};
  s += ',' + format_density(row.count_type1, row.samples) + ',' + format_density(row.count_type2, row.samples);
  char elapsed[32];
  const auto res = std::to_chars(elapsed, elapsed + sizeof elapsed, row.elapsed_seconds, std::chars_format::fixed, 3);
  s += ',' + std::to_string(row.master_seed) + ',' + row.rng_name + ',' + std::string(elapsed, res.ptr);
  if (with_difference) s += ',' + format_density(row.count_type2 - row.count_type1, row.samples);
  return s;
}

nlohmann::json to_json(const EstimateRequest& request) {
  nlohmann::json j;
  j["n_values"] = request.n_values;
  j["samples_per_n"] = request.samples_per_n;
  j["master_seed"] = request.master_seed;
  j["mode"] = request.mode ? nlohmann::json(std::string(to_string(*request.mode))) : nlohmann::json("auto");
  j["workers"] = request.workers;
  return j;
}

}  // namespace symzero
