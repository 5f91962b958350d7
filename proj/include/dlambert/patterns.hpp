#pragma once

/**
 * @file patterns.hpp
 * @brief Checkers for structural patterns among Lambert-congruence solutions.
 *
 * Each checker returns a PatternReport. A report always carries a witness
 * (the solutions, sums and intermediate values it was decided on), and
 * witness_confirms() re-derives the verdict from that witness using direct
 * congruence evaluation only, never the solver.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlambert/modarith.hpp"
#include "dlambert/solver.hpp"

namespace dlambert {

enum class PatternId {
  c_prime_bijection,
  sum_mod_p,
  sum_mod_m,
  conjecture_A,
  conjecture_B,
  inverse_identity,
  negation_identity,
  special_pair,
  order_formula,
};

enum class Verdict { holds, fails, not_applicable };

const char* to_string(PatternId id);
const char* to_string(Verdict v);
std::optional<PatternId> parse_pattern_id(std::string_view name);
std::optional<Verdict> parse_verdict(std::string_view name);

/// The inputs a report was computed for. `param` is j, x or n depending on
/// the pattern; `g` and `c` are whatever the pattern evaluated.
struct PatternInput {
  u64 p = 0;
  unsigned e = 0;
  u64 g = 0;
  u64 c = 0;
  std::optional<u64> param;

  auto operator<=>(const PatternInput&) const = default;
};

struct Witness {
  std::vector<u64> solutions;
  /// Second solution list (S_{c'} for the bijection check).
  std::vector<u64> partner_solutions;
  /// For the bijection check: matching[i] is the index into `solutions`
  /// matched with partner_solutions[i].
  std::vector<u64> matching;
  std::map<std::string, u128> values;

  u128 value(const std::string& key) const;
};

struct PatternReport {
  PatternId id;
  PatternInput input;
  Verdict verdict;
  std::optional<Witness> witness;
};

/// ord_p(g) and ord_{p^e}(g).
struct OrderPair {
  u64 m_p;
  u64 m_pe;
};

OrderPair order_pair(const PrimePower& pp, const Residue& g);

/// The solution of `set` in class j mod m (j = m is the zero class).
u64 solution_in_class(const SolutionSet& set, u64 j);

PatternReport check_c_prime_bijection(const DwpInstance& instance, u64 j,
                                      std::optional<u64> c_prime = std::nullopt);

/// (sum_mod_p, sum_mod_m).
std::pair<PatternReport, PatternReport> check_sums(const DwpInstance& instance);

/// (conjecture_A, conjecture_B): literal window {1..p^e m_p} and extended
/// window {1..p^e m_{p^e}}.
std::pair<PatternReport, PatternReport> check_conjecture(const DwpInstance& instance);

/// Sum of every solution in {1..p^e m_{p^e}}, from the m_p base solutions
/// and their translates by multiples of the period p^e m_p.
u128 extended_sum(const std::vector<u64>& base_solutions, u64 modulus, u64 m_p, u64 m_pe);

/// (inverse_identity, negation_identity) for fixed x.
std::pair<PatternReport, PatternReport> check_inverse_negation(const PrimePower& pp, i64 g,
                                                               u64 x);

/// x = (p^e - p^(e-1))/2 solves x g^x = (p^e + p^(e-1))/2 for a generator g mod p^e.
PatternReport special_solution_check(const PrimePower& pp, i64 g);

/// ord_{p^e}((p-1)^n) against p^(e-1) (n even) or 2 p^(e-1) (n odd).
PatternReport order_formula_check(const PrimePower& pp, u64 n);

/// Re-derives the report's verdict from its witness by direct evaluation.
bool witness_confirms(const PatternReport& report);

std::string to_decimal(u128 value);

}  // namespace dlambert
