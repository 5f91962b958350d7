#pragma once

/**
 * @file sweep.hpp
 * @brief Grid sweeps over (p, e, g, c) with persisted results.
 *
 * Config files are flat `key=value` text; `#` starts a comment. Keys:
 *
 *   p_list        = 3,5,7                  (required)
 *   e_range       = 1-3 | 2                (required)
 *   g_selector    = all-units | units-mod-pe | generators | 2,3
 *   c_selector    = all-units | sample(count, seed) | 1,2,4
 *   pattern_ids   = solve,sum_mod_p,...    (required)
 *   output_path   = results.jsonl          (required)
 *   output_format = json-lines | csv
 *   parallelism   = 4
 *
 * `all-units` for g means the representatives 1..p-1; `units-mod-pe` means
 * every unit mod p^e; `generators` means generators mod p among 1..p-1.
 * `all-units` for c means every unit mod p^e.
 *
 * sample(count, seed) draws `count` distinct units mod p^e per (p, e) with
 * SplitMix64 seeded by seed ^ (p << 32) ^ e: each draw is
 * 1 + next() % (p^e - 1), rejected if divisible by p or already taken.
 * If count is at least the number of units, every unit is used. The sample
 * is sorted ascending.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlambert/modarith.hpp"
#include "dlambert/records.hpp"

namespace dlambert {

enum class GSelectorKind { all_units, units_mod_pe, generators, list };
enum class CSelectorKind { all_units, sample, list };

struct SweepConfig {
  std::vector<u64> p_list;
  unsigned e_min = 1;
  unsigned e_max = 1;
  GSelectorKind g_selector = GSelectorKind::all_units;
  std::vector<u64> g_list;
  CSelectorKind c_selector = CSelectorKind::all_units;
  std::vector<u64> c_list;
  u64 sample_count = 0;
  u64 sample_seed = 0;
  std::vector<std::string> pattern_ids;
  std::string output_path;
  OutputFormat output_format = OutputFormat::json_lines;
  std::optional<unsigned> parallelism;
};

/// Throws ConfigError on anything malformed.
SweepConfig parse_sweep_config(std::string_view text);
SweepConfig load_sweep_config(const std::string& path);

/// Patterns a sweep can evaluate per (p, e, g, c).
bool is_sweep_pattern(std::string_view name);

class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}
  u64 next();

 private:
  u64 state_;
};

std::vector<u64> select_g(const SweepConfig& config, const PrimePower& pp);
std::vector<u64> select_c(const SweepConfig& config, const PrimePower& pp);
std::vector<u64> sample_units(const PrimePower& pp, u64 count, u64 seed);

/// Worker count: explicit value, else DLAMBERT_JOBS, else hardware threads.
unsigned resolve_parallelism(std::optional<unsigned> requested);

/// Runs the grid with `jobs` workers. Records come back sorted by record_less.
std::vector<ResultRecord> run_sweep(const SweepConfig& config, unsigned jobs);

}  // namespace dlambert
