#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "dlambert/solver.hpp"
#include "oracles.hpp"

using namespace dlambert;

namespace {

std::vector<u64> solve(u64 p, unsigned e, i64 g, i64 c) {
  return solve_all(DwpInstance(PrimePower(p, e), g, c)).solutions;
}

}  // namespace

TEST_CASE("instance validation") {
  const PrimePower pp(5, 2);
  CHECK_THROWS_AS(DwpInstance(pp, 5, 1), ValidationError);
  CHECK_THROWS_AS(DwpInstance(pp, 2, 10), ValidationError);
  CHECK_THROWS_AS(DwpInstance(pp, 0, 1), ValidationError);
  const DwpInstance inst(pp, -3, 27);
  CHECK(inst.g().value() == 22);
  CHECK(inst.c().value() == 2);
  CHECK(inst.m() == 4);
  CHECK(inst.range_bound() == 100);
}

TEST_CASE("hand-checked solution sets") {
  CHECK(solve(5, 1, 2, 1) == std::vector<u64>{7, 13, 14, 16});
  CHECK(solve(3, 2, 2, 1) == std::vector<u64>{4, 11});
  CHECK(solve(7, 1, 2, 1) == std::vector<u64>{2, 4, 15});
  CHECK(solve(5, 2, 7, 1) == std::vector<u64>{7, 74, 76, 93});
  CHECK(solve(5, 3, 1, 3) == std::vector<u64>{3});
  for (u64 x : solve(5, 1, 2, 1)) CHECK(oracle::mulmod(x, oracle::power(2, x, 5), 5) == 1);
}

TEST_CASE("solutions beyond the window are translates by p^e m") {
  const auto scanned = oracle::scan(3, 2, 2, 1, 54);
  CHECK(scanned == std::vector<u64>{4, 11, 22, 29, 40, 47});
  const auto base = solve(3, 2, 2, 1);
  for (u64 x : scanned) CHECK(std::count(base.begin(), base.end(), (x - 1) % 18 + 1) == 1);
}

TEST_CASE("solve_mod_p") {
  const DwpInstance inst(PrimePower(5, 1), 2, 1);
  const auto set = solve_mod_p(inst);
  CHECK(set.solutions == std::vector<u64>{7, 13, 14, 16});
  CHECK(set.range_bound == 20);
  CHECK(set.method == SolveMethod::hensel);
  CHECK_THROWS_AS(solve_mod_p(DwpInstance(PrimePower(5, 2), 2, 1)), PreconditionError);
}

TEST_CASE("hensel_lift") {
  const DwpInstance inst(PrimePower(3, 2), 2, 1);
  // Class x0 = 1: x * omega * <g>^x = 1 (mod 3) has root a = 2.
  CHECK(hensel_lift(inst, 1, 2) == 2);
  CHECK(hensel_lift(inst, 2, 1) == 4);
  CHECK_THROWS_AS(hensel_lift(inst, 1, 1), PreconditionError);
  CHECK_THROWS_AS(hensel_lift(inst, 1, 0), PreconditionError);
}

TEST_CASE("oracle equivalence on small grids") {
  for (u64 p : {3u, 5u, 7u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      const u64 mod = pp.modulus();
      for (u64 g = 1; g < p; ++g) {
        for (u64 c = 1; c < mod; ++c) {
          if (c % p == 0) continue;
          CAPTURE(p);
          CAPTURE(e);
          CAPTURE(g);
          CAPTURE(c);
          const DwpInstance inst(pp, static_cast<i64>(g), static_cast<i64>(c));
          const auto fast = solve_all(inst);
          const auto expected = oracle::scan(p, e, g, c, inst.range_bound());
          REQUIRE(fast.solutions == expected);
          CHECK(brute_force(inst).solutions == expected);
          CHECK(fast.solutions.size() == oracle::order(g, p));
          CHECK(count_solutions(inst) == fast.solutions.size());
        }
      }
    }
  }
}

TEST_CASE("g that is not reduced mod p still matches the oracle") {
  // g = 7 mod 25 has ord_5 = 4, ord_25 = 4; g = 6 has ord_5 = 1.
  for (u64 g : {6u, 7u, 11u, 12u, 23u}) {
    for (u64 c = 1; c < 25; ++c) {
      if (c % 5 == 0) continue;
      const DwpInstance inst(PrimePower(5, 2), static_cast<i64>(g), static_cast<i64>(c));
      CHECK(solve_all(inst).solutions == oracle::scan(5, 2, g, c, inst.range_bound()));
    }
  }
}

TEST_CASE("residue pairs are distinct and consistent") {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const u64 p = std::vector<u64>{3, 5, 7, 11, 13, 17, 19}[rng.below(7)];
    const unsigned e = 1 + static_cast<unsigned>(rng.below(4));
    const PrimePower pp(p, e);
    const u64 g = 1 + rng.below(pp.modulus() - 1);
    const u64 c = 1 + rng.below(pp.modulus() - 1);
    if (g % p == 0 || c % p == 0) continue;
    const DwpInstance inst(pp, static_cast<i64>(g), static_cast<i64>(c));
    const auto set = solve_all(inst);
    REQUIRE(set.solutions.size() == inst.m());
    CHECK(std::is_sorted(set.solutions.begin(), set.solutions.end()));
    std::set<u64> classes;
    for (const auto& [r_m, r_pe] : set.residue_pairs()) {
      CHECK(r_m < inst.m());
      CHECK(r_pe < pp.modulus());
      classes.insert(r_m);
    }
    CHECK(classes.size() == inst.m());
    for (u64 x : set.solutions) {
      CHECK(x >= 1);
      CHECK(x <= inst.range_bound());
      CHECK(x % p != 0);
      CHECK(satisfies(x, g, c, pp.modulus()));
      // A solution mod p^e is a solution mod every lower power.
      for (unsigned k = 1; k < e; ++k) CHECK(satisfies(x, g, c, oracle::ipow(p, k)));
    }
  }
}

TEST_CASE("brute_force with an explicit upper bound") {
  const DwpInstance inst(PrimePower(3, 2), 2, 1);
  CHECK(brute_force(inst, 54).solutions == std::vector<u64>{4, 11, 22, 29, 40, 47});
  CHECK(brute_force(inst, 10).solutions == std::vector<u64>{4});
  CHECK(brute_force(inst).method == SolveMethod::brute_force);
  CHECK(std::string(to_string(SolveMethod::hensel)) == "hensel");
}

TEST_CASE("satisfies") {
  CHECK(satisfies(7, 2, 1, 5));
  CHECK_FALSE(satisfies(8, 2, 1, 5));
  CHECK(satisfies(10, 2, 15, 25));
}
