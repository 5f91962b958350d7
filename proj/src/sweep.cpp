#include "dlambert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "dlambert/patterns.hpp"
#include "dlambert/solver.hpp"

namespace dlambert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

u64 parse_number(std::string_view text, std::string_view key) {
  text = trim(text);
  u64 value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError("bad number '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(trim(text.substr(pos, end - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<u64> parse_numbers(std::string_view text, std::string_view key) {
  std::vector<u64> out;
  for (auto item : split_list(text)) out.push_back(parse_number(item, key));
  if (out.empty()) throw ConfigError(std::string(key) + " is empty");
  return out;
}

struct WorkItem {
  PrimePower pp;
  u64 g;
  const std::vector<u64>* cs;
};

u64 elapsed_since(std::chrono::steady_clock::time_point start) {
  return static_cast<u64>(std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count());
}

void evaluate_item(const WorkItem& item, const std::set<std::string>& patterns,
                   std::vector<ResultRecord>& out) {
  const auto& pp = item.pp;
  const OrderPair orders = order_pair(pp, Residue(item.g, pp.modulus()));
  const bool want_sums = patterns.count("sum_mod_p") || patterns.count("sum_mod_m");
  const bool want_conj = patterns.count("conjecture_A") || patterns.count("conjecture_B");

  auto keep = [&](const PatternReport& r, u64 us) {
    if (patterns.count(to_string(r.id))) {
      out.push_back(record_from_report(r, orders.m_p, orders.m_pe, us));
    }
  };

  for (u64 c : *item.cs) {
    const DwpInstance inst(pp, static_cast<i64>(item.g), static_cast<i64>(c));
    if (patterns.count(std::string(kSolvePattern))) {
      const auto start = std::chrono::steady_clock::now();
      const SolutionSet set = solve_all(inst);
      ResultRecord r;
      r.elapsed_us = elapsed_since(start);
      r.p = pp.p();
      r.e = pp.e();
      r.g = inst.g().value();
      r.c = inst.c().value();
      r.pattern = std::string(kSolvePattern);
      r.verdict = std::string(kSolvedVerdict);
      r.solutions = set.solutions;
      u128 sum = 0;
      for (u64 x : set.solutions) sum += x;
      r.sum = to_decimal(sum);
      r.m_p = orders.m_p;
      r.m_pe = orders.m_pe;
      out.push_back(std::move(r));
    }
    if (want_sums) {
      const auto start = std::chrono::steady_clock::now();
      const auto [mod_p, mod_m] = check_sums(inst);
      const u64 us = elapsed_since(start);
      keep(mod_p, us);
      keep(mod_m, us);
    }
    if (want_conj) {
      const auto start = std::chrono::steady_clock::now();
      const auto [a, b] = check_conjecture(inst);
      const u64 us = elapsed_since(start);
      keep(a, us);
      keep(b, us);
    }
    if (patterns.count("c_prime_bijection")) {
      const auto start = std::chrono::steady_clock::now();
      const PatternReport r = check_c_prime_bijection(inst, 1);
      keep(r, elapsed_since(start));
    }
  }
}

}  // namespace

u64 SplitMix64::next() {
  u64 z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool is_sweep_pattern(std::string_view name) {
  return name == kSolvePattern || name == "sum_mod_p" || name == "sum_mod_m" ||
         name == "conjecture_A" || name == "conjecture_B" || name == "c_prime_bijection";
}

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  unsigned line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("duplicate key " + key);

    if (key == "p_list") {
      cfg.p_list = parse_numbers(value, key);
    } else if (key == "e_range") {
      const auto dash = value.find('-');
      if (dash == std::string_view::npos) {
        cfg.e_min = cfg.e_max = static_cast<unsigned>(parse_number(value, key));
      } else {
        cfg.e_min = static_cast<unsigned>(parse_number(value.substr(0, dash), key));
        cfg.e_max = static_cast<unsigned>(parse_number(value.substr(dash + 1), key));
      }
      if (cfg.e_min < 1 || cfg.e_min > cfg.e_max) throw ConfigError("e_range must satisfy 1 <= lo <= hi");
    } else if (key == "g_selector") {
      if (value == "all-units") {
        cfg.g_selector = GSelectorKind::all_units;
      } else if (value == "units-mod-pe") {
        cfg.g_selector = GSelectorKind::units_mod_pe;
      } else if (value == "generators") {
        cfg.g_selector = GSelectorKind::generators;
      } else {
        cfg.g_selector = GSelectorKind::list;
        cfg.g_list = parse_numbers(value, key);
      }
    } else if (key == "c_selector") {
      if (value == "all-units") {
        cfg.c_selector = CSelectorKind::all_units;
      } else if (value.starts_with("sample")) {
        const auto open = value.find('(');
        const auto close = value.rfind(')');
        if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
            !trim(value.substr(close + 1)).empty()) {
          throw ConfigError("c_selector sample syntax is sample(count, seed)");
        }
        const auto args = parse_numbers(value.substr(open + 1, close - open - 1), key);
        if (args.size() != 2) throw ConfigError("sample needs both count and seed");
        cfg.c_selector = CSelectorKind::sample;
        cfg.sample_count = args[0];
        cfg.sample_seed = args[1];
      } else {
        cfg.c_selector = CSelectorKind::list;
        cfg.c_list = parse_numbers(value, key);
      }
    } else if (key == "pattern_ids") {
      for (auto item : split_list(value)) {
        if (!is_sweep_pattern(item)) {
          throw ConfigError("pattern '" + std::string(item) + "' cannot be swept");
        }
        cfg.pattern_ids.emplace_back(item);
      }
    } else if (key == "output_path") {
      if (value.empty()) throw ConfigError("output_path is empty");
      cfg.output_path = value;
    } else if (key == "output_format") {
      if (value == "json-lines") {
        cfg.output_format = OutputFormat::json_lines;
      } else if (value == "csv") {
        cfg.output_format = OutputFormat::csv;
      } else {
        throw ConfigError("output_format must be json-lines or csv");
      }
    } else if (key == "parallelism") {
      const u64 n = parse_number(value, key);
      if (n < 1) throw ConfigError("parallelism must be at least 1");
      cfg.parallelism = static_cast<unsigned>(n);
    } else {
      throw ConfigError("unknown key " + key);
    }
  }
  for (const char* required : {"p_list", "e_range", "pattern_ids", "output_path"}) {
    if (!seen.count(required)) throw ConfigError(std::string("missing key ") + required);
  }
  for (u64 p : cfg.p_list) {
    try {
      PrimePower check(p, cfg.e_max);
    } catch (const ValidationError& ex) {
      throw ConfigError("p_list entry " + std::to_string(p) + ": " + ex.what());
    }
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

std::vector<u64> select_g(const SweepConfig& config, const PrimePower& pp) {
  const u64 p = pp.p();
  std::vector<u64> out;
  switch (config.g_selector) {
    case GSelectorKind::all_units:
      for (u64 g = 1; g < p; ++g) out.push_back(g);
      break;
    case GSelectorKind::units_mod_pe:
      for (u64 g = 1; g < pp.modulus(); ++g) {
        if (g % p != 0) out.push_back(g);
      }
      break;
    case GSelectorKind::generators:
      for (u64 g = 1; g < p; ++g) {
        if (is_generator(Residue(g, p))) out.push_back(g);
      }
      break;
    case GSelectorKind::list:
      for (u64 g : config.g_list) {
        if (g % p == 0) throw ConfigError("g = " + std::to_string(g) + " is divisible by p = " + std::to_string(p));
        out.push_back(g % pp.modulus());
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<u64> sample_units(const PrimePower& pp, u64 count, u64 seed) {
  const u64 mod = pp.modulus();
  const u64 p = pp.p();
  if (count >= pp.phi()) {
    std::vector<u64> all;
    for (u64 c = 1; c < mod; ++c) {
      if (c % p != 0) all.push_back(c);
    }
    return all;
  }
  SplitMix64 rng(seed ^ (pp.p() << 32) ^ pp.e());
  std::set<u64> chosen;
  while (chosen.size() < count) {
    const u64 c = 1 + rng.next() % (mod - 1);
    if (c % p != 0) chosen.insert(c);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<u64> select_c(const SweepConfig& config, const PrimePower& pp) {
  const u64 p = pp.p();
  std::vector<u64> out;
  switch (config.c_selector) {
    case CSelectorKind::all_units:
      return sample_units(pp, pp.phi(), 0);
    case CSelectorKind::sample:
      return sample_units(pp, config.sample_count, config.sample_seed);
    case CSelectorKind::list:
      for (u64 c : config.c_list) {
        if (c % p == 0) throw ConfigError("c = " + std::to_string(c) + " is divisible by p = " + std::to_string(p));
        out.push_back(c % pp.modulus());
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned resolve_parallelism(std::optional<unsigned> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("DLAMBERT_JOBS")) {
    unsigned n = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec == std::errc{} && ptr == text.data() + text.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ResultRecord> run_sweep(const SweepConfig& config, unsigned jobs) {
  const std::set<std::string> patterns(config.pattern_ids.begin(), config.pattern_ids.end());

  // c-lists are shared by every g of a given (p, e).
  std::deque<std::vector<u64>> c_lists;
  std::vector<WorkItem> items;
  for (u64 p : config.p_list) {
    for (unsigned e = config.e_min; e <= config.e_max; ++e) {
      const PrimePower pp(p, e);
      c_lists.push_back(select_c(config, pp));
      for (u64 g : select_g(config, pp)) items.push_back({pp, g, &c_lists.back()});
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::vector<ResultRecord> records;
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<ResultRecord> local;
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        evaluate_item(items[i], patterns, local);
      }
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(merge_mutex);
    records.insert(records.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
  };

  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(), record_less);
  return records;
}

}  // namespace dlambert
