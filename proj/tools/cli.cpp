#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symzero/boundary_code.hpp"
#include "symzero/census.hpp"
#include "symzero/character.hpp"
#include "symzero/errors.hpp"
#include "symzero/limits.hpp"
#include "symzero/montecarlo.hpp"
#include "symzero/partition.hpp"
#include "symzero/sampler.hpp"

namespace symzero::cli {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw Error("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

constexpr std::size_t kMaxRangeSize = 10'000'000;

const char* kCsvSchema =
    "Output (CSV, one row per n):\n"
    "  n,samples,mode,count_zero,count_type1,count_type2,z_hat,z1_hat,z2_hat,master_seed,rng_name,elapsed_seconds\n"
    "count_zero and z_hat are empty in types-only rows; densities have 6 decimals.\n"
    "A failed n is reported as a row with mode=error.";

// Loads the table from `path` when it is present and large enough, otherwise
// builds it (and writes the cache when a path was given).
PartitionCountTable load_table(int max_n, const std::string& path, std::ostream& err) {
  const int cap = ptable_cap();
  if (max_n > cap) {
    throw ResourceLimit("n = " + std::to_string(max_n) + " exceeds the p-table cap of " + std::to_string(cap) +
                        " (set SYMZERO_PTABLE_CAP to raise it)");
  }
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    auto table = PartitionCountTable::load(in, cap);
    if (table.max_n() >= max_n) return table;
    err << "p-table cache " << path << " only reaches " << table.max_n() << "; rebuilding\n";
  }
  auto table = PartitionCountTable::build(max_n, cap);
  if (!path.empty()) {
    std::ofstream out(path);
    table.save(out);
    if (!out) err << "warning: could not write p-table cache " << path << '\n';
  }
  return table;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<int> parse_range(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    std::vector<int> fields;
    std::size_t p = 0;
    while (p <= item.size()) {
      const std::size_t colon = std::min(item.find(':', p), item.size());
      fields.push_back(parse_int(item.substr(p, colon - p)));
      p = colon + 1;
    }
    if (fields.size() == 1) {
      values.push_back(fields[0]);
    } else if (fields.size() <= 3) {
      const int step = fields.size() == 3 ? fields[2] : 1;
      if (step < 1) throw Error("range step must be positive in '" + std::string(item) + "'");
      for (long v = fields[0]; v <= fields[1]; v += step) {
        values.push_back(static_cast<int>(v));
        if (values.size() > kMaxRangeSize) throw Error("range too long");
      }
    } else {
      throw Error("bad range '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters of symmetric groups and zeros of their character tables", "symzero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string lambda_text, mu_text, bits_text, n_text, ptable_path, mode_text = "auto", metadata_path;
  int n = 0, t = 1, count = 1, digits = 6;
  std::uint64_t seed = 0, index = 0, samples = 0;
  unsigned threads = 0;
  bool no_eval = false, with_diff = false;

  auto* eval = app.add_subcommand("eval", "Print chi_lambda(mu) as a decimal integer");
  eval->add_option("--lambda", lambda_text, "Irreducible character, e.g. 3,1")->required();
  eval->add_option("--mu", mu_text, "Cycle type, e.g. 2,2")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify the entry (lambda, mu) as a zero of type I / II");
  classify_cmd->add_option("--lambda", lambda_text, "Irreducible character")->required();
  classify_cmd->add_option("--mu", mu_text, "Cycle type")->required();
  classify_cmd->add_flag("--no-eval", no_eval, "Only run the core tests; zero=... is then a lower bound");
  classify_cmd->footer("Output: zero=<bool> type1=<bool> type2=<bool> evaluated=<bool>");

  auto* sample = app.add_subcommand("sample", "Draw uniform random partitions of n");
  sample->add_option("--n", n, "Size of the partitions")->required();
  sample->add_option("--seed", seed, "Master seed")->capture_default_str();
  sample->add_option("--index", index, "First stream index")->capture_default_str();
  sample->add_option("--count", count, "Number of partitions (stream indices index, index+1, ...)")
      ->capture_default_str();
  sample->add_option("--ptable", ptable_path, "Partition-count cache file to load or create");
  sample->footer("Output: one comma-separated partition per line.");

  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo estimates of z, z_I, z_II for a range of n");
  sweep_cmd->add_option("--n", n_text, "n values: a, a:b, a:b:step, or a comma list")->required();
  sweep_cmd->add_option("--samples", samples, "Sample pairs per n")->required();
  sweep_cmd->add_option("--mode", mode_text, "types-only, full-eval, or auto (full-eval for n <= 300)")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "Master seed; per-n seeds are derived from it")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = auto); results do not depend on it")
      ->capture_default_str();
  sweep_cmd->add_option("--ptable", ptable_path, "Partition-count cache file to load or create");
  sweep_cmd->add_flag("--with-diff", with_diff, "Append a z2_minus_z1 column");
  sweep_cmd->add_option("--metadata", metadata_path, "Write a JSON sidecar with tool version, rng and request");
  sweep_cmd->footer(kCsvSchema);

  auto* scan = app.add_subcommand("scan", "Exact zero counts over the full character table of S_n");
  scan->add_option("--n", n_text, "n values (range syntax as for sweep)")->required();
  scan->add_option("--threads", threads, "Worker threads (0 = auto)")->capture_default_str();
  scan->add_option("--digits", digits, "Decimal places for densities")->capture_default_str();
  scan->footer(
      "Output: the sweep CSV schema with samples=exact, plus a trailing z1_over_z column\n"
      "(z_I / z to 3 decimals, empty when the table has no zeros). Cap: SYMZERO_SCAN_CAP (default 20).");

  auto* type1 = app.add_subcommand("count-type1", "Exact number of type-I zeros |Z_I(S_n)|");
  type1->add_option("--n", n_text, "n values (range syntax as for sweep)")->required();
  type1->add_option("--digits", digits, "Decimal places for z1")->capture_default_str();
  type1->footer("Output CSV: n,count_type1,p_n,z1. Cap: SYMZERO_TYPE1_CAP (default 5000).");

  auto* cores = app.add_subcommand("cores", "Number of t-core partitions of n");
  cores->add_option("--n", n, "n")->required();
  cores->add_option("--t", t, "t")->required();

  auto* pn = app.add_subcommand("pn", "Partition number p(n)");
  pn->add_option("--n", n, "n")->required();
  pn->add_option("--ptable", ptable_path, "Partition-count cache file to load or create");

  auto* encode_cmd = app.add_subcommand("encode", "Boundary code of a partition, as 0b<bits> in walk order");
  encode_cmd->add_option("--lambda", lambda_text, "Partition")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Partition of a boundary code (normalized first)");
  decode_cmd->add_option("--bits", bits_text, "Bit string in walk order, optional 0b prefix")->required();
  decode_cmd->footer("Output: comma-separated parts (empty line for the empty partition).");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    err << target->help();
    return kUsageError;
  }

  try {
    if (eval->parsed()) {
      out << to_decimal(character(Partition::parse(lambda_text), Partition::parse(mu_text))) << '\n';
    } else if (classify_cmd->parsed()) {
      const ZeroClass c = classify(Partition::parse(lambda_text), Partition::parse(mu_text), !no_eval);
      out << "zero=" << bool_text(c.is_zero) << " type1=" << bool_text(c.is_type1) << " type2=" << bool_text(c.is_type2)
          << " evaluated=" << bool_text(c.evaluated) << '\n';
    } else if (sample->parsed()) {
      if (n < 0 || count < 0) throw Error("--n and --count must be nonnegative");
      const auto table = load_table(n, ptable_path, err);
      for (int k = 0; k < count; ++k) {
        out << random_partition(n, SampleStream{seed, index + static_cast<std::uint64_t>(k)}, table).to_string()
            << '\n';
      }
    } else if (sweep_cmd->parsed()) {
      EstimateRequest request;
      request.n_values = parse_range(n_text);
      request.samples_per_n = samples;
      request.master_seed = seed;
      request.workers = threads;
      if (mode_text != "auto") request.mode = parse_mode(mode_text);
      if (samples < 1) throw Error("--samples must be at least 1");
      int max_n = 0;
      for (int v : request.n_values) max_n = std::max(max_n, v);
      const auto table = load_table(max_n, ptable_path, err);
      if (!metadata_path.empty()) {
        nlohmann::json meta;
        meta["tool"] = "symzero";
        meta["version"] = std::string(kVersion);
        meta["rng_name"] = std::string(kRngName);
        meta["seed_derivation"] = "per-n seed derive_seed(master_seed, n); sample i uses streams 2i (lambda), 2i+1 (mu)";
        meta["request"] = to_json(request);
        std::ofstream meta_out(metadata_path);
        meta_out << meta.dump(2) << '\n';
      }
      out << csv_header(with_diff) << '\n' << std::flush;
      sweep(request, table, [&](const DensityEstimate& row) {
        if (row.error) err << "n = " << row.n << ": " << *row.error << '\n';
        out << csv_row(row, with_diff) << '\n' << std::flush;
      });
    } else if (scan->parsed()) {
      const auto values = parse_range(n_text);
      const int cap = scan_cap();
      for (int v : values) {
        if (v > cap) {
          throw ResourceLimit("scan at n = " + std::to_string(v) + " exceeds the cap of " + std::to_string(cap) +
                              " (set SYMZERO_SCAN_CAP to raise it)");
        }
        if (v < 1) throw Error("scan needs n >= 1");
      }
      out << csv_header() << ",z1_over_z\n";
      for (int v : values) {
        const ScanResult r = full_table_scan(v, threads, cap);
        char elapsed[32];
        const auto res = std::to_chars(elapsed, elapsed + sizeof elapsed, r.elapsed_seconds, std::chars_format::fixed, 3);
        out << r.n << ",exact,full-eval," << to_decimal(r.zero_count) << ',' << to_decimal(r.type1_count) << ','
            << to_decimal(r.type2_count) << ',' << r.z(digits) << ',' << r.z1(digits) << ',' << r.z2(digits) << ",,,"
            << std::string(elapsed, res.ptr) << ',' << r.type1_share(3) << '\n'
            << std::flush;
      }
    } else if (type1->parsed()) {
      const auto values = parse_range(n_text);
      const int cap = type1_cap();
      int max_n = 1;
      for (int v : values) {
        if (v > cap) {
          throw ResourceLimit("count-type1 at n = " + std::to_string(v) + " exceeds the cap of " +
                              std::to_string(cap) + " (set SYMZERO_TYPE1_CAP to raise it)");
        }
        if (v < 1) throw Error("count-type1 needs n >= 1");
        max_n = std::max(max_n, v);
      }
      const auto table = PartitionCountTable::build(max_n, std::max(max_n, ptable_cap()));
      out << "n,count_type1,p_n,z1\n";
      for (int v : values) {
        const BigCount c = count_type1(v, cap);
        const BigCount total = table[v] * table[v];
        out << v << ',' << to_decimal(c) << ',' << to_decimal(table[v]) << ',' << fixed_point_ratio(c, total, digits)
            << '\n'
            << std::flush;
      }
    } else if (cores->parsed()) {
      if (n < 0 || t < 1) throw Error("cores needs n >= 0 and t >= 1");
      const auto table = load_table(n, "", err);
      out << to_decimal(count_t_cores(n, t, table)) << '\n';
    } else if (pn->parsed()) {
      if (n < 0) throw Error("pn needs n >= 0");
      const auto table = load_table(n, ptable_path, err);
      out << to_decimal(table[n]) << '\n';
    } else if (encode_cmd->parsed()) {
      out << encode(Partition::parse(lambda_text)).to_string(true) << '\n';
    } else if (decode_cmd->parsed()) {
      out << decode(BoundaryCode::parse(bits_text)).to_string() << '\n';
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace symzero::cli
