#pragma once

/**
 * @file solver.hpp
 * @brief Solutions of the discrete Lambert congruence x * g^x = c (mod p^e).
 *
 * With m = ord_p(g), the map x -> x g^x mod p^e is periodic with period
 * p^e * m. Within {1, ..., p^e m} and away from multiples of p there are
 * exactly m solutions, one for each class x0 mod m. solve_all finds them by
 * solving the class-x0 congruence x * omega(g)^x0 * <g>^x = c mod p, lifting
 * that root to p^e, and recombining with x = x0 (mod m) by CRT.
 */

#include <optional>
#include <utility>
#include <vector>

#include "dlambert/modarith.hpp"
#include "dlambert/padic.hpp"

namespace dlambert {

/// A validated problem (p, e, g, c) with p not dividing g or c.
class DwpInstance {
 public:
  DwpInstance(const PrimePower& pp, i64 g, i64 c);

  const PrimePower& prime_power() const { return pp_; }
  const Residue& g() const { return g_; }
  const Residue& c() const { return c_; }
  /// ord_p(g mod p).
  u64 m() const { return m_; }
  /// p^e * m, the canonical solution window.
  u64 range_bound() const { return pp_.modulus() * m_; }

 private:
  PrimePower pp_;
  Residue g_;
  Residue c_;
  u64 m_;
};

enum class SolveMethod { hensel, brute_force };

const char* to_string(SolveMethod method);

struct SolutionSet {
  DwpInstance instance;
  std::vector<u64> solutions;  // ascending
  u64 range_bound;
  SolveMethod method;

  /// (x mod m, x mod p^e) for every solution, in solution order.
  std::vector<std::pair<u64, u64>> residue_pairs() const;
};

/// The e = 1 case by CRT directly: x = c g^-x0 (mod p), x = x0 (mod m).
SolutionSet solve_mod_p(const DwpInstance& instance);

/// Lifts a root a (mod p) of h(x) = x omega(g)^x0 <g>^x - c to the unique
/// root in {1, ..., p^e} congruent to a mod p.
u64 hensel_lift(const DwpInstance& instance, u64 x0, u64 a);

SolutionSet solve_all(const DwpInstance& instance);

/// Exhaustive scan of {1, ..., upper} (default p^e m).
SolutionSet brute_force(const DwpInstance& instance, std::optional<u64> upper = std::nullopt);

/// m, without enumerating anything.
u64 count_solutions(const DwpInstance& instance);

/// x * g^x - c == 0 (mod modulus), evaluated directly.
bool satisfies(u64 x, u64 g, u64 c, u64 modulus);

}  // namespace dlambert
