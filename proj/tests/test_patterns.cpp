#include <doctest.h>

#include <string>
#include <vector>

#include "dlambert/patterns.hpp"
#include "oracles.hpp"

using namespace dlambert;

namespace {

DwpInstance inst(u64 p, unsigned e, i64 g, i64 c) { return DwpInstance(PrimePower(p, e), g, c); }

}  // namespace

TEST_CASE("pattern and verdict names round trip") {
  for (PatternId id : {PatternId::c_prime_bijection, PatternId::sum_mod_p, PatternId::sum_mod_m,
                       PatternId::conjecture_A, PatternId::conjecture_B,
                       PatternId::inverse_identity, PatternId::negation_identity,
                       PatternId::special_pair, PatternId::order_formula}) {
    CHECK(parse_pattern_id(to_string(id)) == id);
  }
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::not_applicable}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK_FALSE(parse_pattern_id("nonsense").has_value());
  CHECK(std::string(to_string(Verdict::not_applicable)) == "not_applicable");
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(0) == "0");
  CHECK(to_decimal(153) == "153");
  const u128 big = static_cast<u128>(1) << 100;
  CHECK(to_decimal(big) == "1267650600228229401496703205376");
}

TEST_CASE("c' bijection: worked instance") {
  const auto r = check_c_prime_bijection(inst(5, 1, 2, 1), 1);
  CHECK(r.verdict == Verdict::holds);
  REQUIRE(r.witness);
  CHECK(r.witness->solutions == std::vector<u64>{7, 13, 14, 16});
  CHECK(r.witness->partner_solutions == std::vector<u64>{2, 8, 9, 11});
  CHECK(r.witness->value("x_j") == 13);
  CHECK(r.witness->value("c_prime") == 3);
  CHECK(witness_confirms(r));

  // Any representative congruent to x_j mod p is accepted.
  const auto base = check_c_prime_bijection(inst(5, 2, 2, 1), 1);
  const u64 shifted = static_cast<u64>(base.witness->value("c_prime")) + 5;
  CHECK(check_c_prime_bijection(inst(5, 2, 2, 1), 1, shifted).verdict == Verdict::holds);
  CHECK_THROWS_AS(check_c_prime_bijection(inst(5, 1, 2, 1), 1, 4), PreconditionError);
  CHECK_THROWS_AS(check_c_prime_bijection(inst(5, 1, 2, 1), 0), PreconditionError);
  CHECK_THROWS_AS(check_c_prime_bijection(inst(5, 1, 2, 1), 5), PreconditionError);
}

TEST_CASE("c' bijection holds across a grid") {
  for (u64 p : {3u, 5u, 7u, 11u}) {
    for (unsigned e = 1; e <= 2; ++e) {
      const u64 mod = oracle::ipow(p, e);
      for (u64 g = 1; g < p; ++g) {
        for (u64 c = 1; c < mod; c += 3) {
          if (c % p == 0) continue;
          const auto instance = inst(p, e, static_cast<i64>(g), static_cast<i64>(c));
          for (u64 j = 1; j <= instance.m(); ++j) {
            const auto r = check_c_prime_bijection(instance, j);
            CHECK(r.verdict == Verdict::holds);
            CHECK(witness_confirms(r));
          }
        }
      }
    }
  }
}

TEST_CASE("sum identities") {
  const auto [mod_p, mod_m] = check_sums(inst(5, 1, 2, 1));
  CHECK(mod_p.verdict == Verdict::holds);
  CHECK(mod_p.witness->value("sum") == 50);
  CHECK(mod_m.verdict == Verdict::not_applicable);  // m = 4 is even

  const auto [deg_p, deg_m] = check_sums(inst(7, 1, 1, 3));
  CHECK(deg_p.verdict == Verdict::not_applicable);
  CHECK(deg_m.verdict == Verdict::holds);

  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e = 1; e <= 2; ++e) {
      const u64 mod = oracle::ipow(p, e);
      for (u64 g = 2; g < p; ++g) {
        for (u64 c = 1; c < mod; ++c) {
          if (c % p == 0) continue;
          const auto [a, b] = check_sums(inst(p, e, static_cast<i64>(g), static_cast<i64>(c)));
          CHECK(a.verdict == Verdict::holds);
          CHECK(b.verdict != Verdict::fails);
          CHECK(witness_confirms(a));
          CHECK(witness_confirms(b));
          u64 sum = 0;
          for (u64 x : oracle::scan(p, e, g, c, mod * oracle::order(g, p))) sum += x;
          CHECK(a.witness->value("sum") == sum);
        }
      }
    }
  }
}

TEST_CASE("conjecture interpretations: the (3, 2, 2, 1) record") {
  const auto [a, b] = check_conjecture(inst(3, 2, 2, 1));
  CHECK(a.verdict == Verdict::fails);
  CHECK(a.witness->value("sum") == 15);
  CHECK(a.witness->value("sum_mod_pe") == 6);
  CHECK(witness_confirms(a));

  CHECK(b.verdict == Verdict::holds);
  CHECK(b.witness->value("translates") == 3);
  CHECK(b.witness->value("m_pe") == 6);
  // 4 + 11 + 22 + 29 + 40 + 47
  CHECK(b.witness->value("sum") == 153);
  CHECK(witness_confirms(b));
}

TEST_CASE("extended_sum matches direct enumeration") {
  for (u64 p : {3u, 5u, 7u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      const u64 mod = pp.modulus();
      for (u64 g = 2; g < mod; g += 3) {
        if (g % p == 0) continue;
        const u64 c = 1;
        const auto orders = order_pair(pp, Residue(g, mod));
        CHECK(orders.m_p == oracle::order(g, p));
        CHECK(orders.m_pe == oracle::order(g, mod));
        const auto base = solve_all(inst(p, e, static_cast<i64>(g), c)).solutions;
        u128 direct = 0;
        for (u64 x : oracle::scan(p, e, g, c, mod * orders.m_pe)) direct += x;
        CHECK(extended_sum(base, mod, orders.m_p, orders.m_pe) == direct);
      }
    }
  }
}

TEST_CASE("every conjecture report is confirmed by its witness") {
  for (u64 p : {3u, 5u, 7u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const u64 mod = oracle::ipow(p, e);
      for (u64 g = 1; g < mod; g += 2) {
        if (g % p == 0) continue;
        for (u64 c = 1; c < mod; c += 5) {
          if (c % p == 0) continue;
          const auto [a, b] = check_conjecture(inst(p, e, static_cast<i64>(g), static_cast<i64>(c)));
          CHECK(witness_confirms(a));
          CHECK(witness_confirms(b));
        }
      }
    }
  }
}

TEST_CASE("tampered witnesses are rejected") {
  auto [a, b] = check_conjecture(inst(3, 2, 2, 1));
  a.verdict = Verdict::holds;
  CHECK_FALSE(witness_confirms(a));
  b.witness->solutions.back() += 1;
  CHECK_FALSE(witness_confirms(b));

  auto r = check_c_prime_bijection(inst(5, 1, 2, 1), 1);
  r.witness->partner_solutions[0] = 3;
  CHECK_FALSE(witness_confirms(r));

  auto none = check_sums(inst(5, 1, 2, 1)).first;
  none.witness.reset();
  CHECK_FALSE(witness_confirms(none));
}

TEST_CASE("inverse and negation identities") {
  oracle::Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const u64 p = std::vector<u64>{3, 5, 7, 11, 13}[rng.below(5)];
    const unsigned e = 1 + static_cast<unsigned>(rng.below(3));
    const PrimePower pp(p, e);
    const u64 mod = pp.modulus();
    const u64 g = 1 + rng.below(mod - 1);
    const u64 x = 1 + rng.below(mod * p);
    if (g % p == 0) continue;
    const auto [inv, neg] = check_inverse_negation(pp, static_cast<i64>(g), x);
    CHECK(inv.verdict == Verdict::holds);
    CHECK(neg.verdict == Verdict::holds);
    CHECK(witness_confirms(inv));
    CHECK(witness_confirms(neg));
    const u64 c = oracle::mulmod(x % mod, oracle::power(g, x, mod), mod);
    const u64 g_inv = *oracle::inverse(g, mod);
    const u64 c1 = oracle::mulmod(x % mod, oracle::power(g_inv, x, mod), mod);
    CHECK(oracle::mulmod(c, c1, mod) == oracle::mulmod(x % mod, x % mod, mod));
  }
  CHECK_THROWS_AS(check_inverse_negation(PrimePower(5, 1), 10, 3), PreconditionError);
}

TEST_CASE("special pair") {
  const auto r = special_solution_check(PrimePower(5, 2), 2);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.witness->value("x") == 10);
  CHECK(r.witness->value("c") == 15);
  CHECK(r.witness->value("lhs") == 15);
  CHECK(witness_confirms(r));
  CHECK(oracle::mulmod(10, oracle::power(2, 10, 25), 25) == 15);
  CHECK_THROWS_AS(special_solution_check(PrimePower(7, 1), 2), PreconditionError);

  for (u64 p : {3u, 5u, 7u, 11u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      const u64 mod = pp.modulus();
      for (u64 g = 2; g < mod; ++g) {
        if (g % p == 0 || oracle::order(g, mod) != pp.phi()) continue;
        const auto s = special_solution_check(pp, static_cast<i64>(g));
        CHECK(s.verdict == Verdict::holds);
        CHECK(witness_confirms(s));
      }
    }
  }
}

TEST_CASE("order formula") {
  const auto r = order_formula_check(PrimePower(5, 2), 3);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.witness->value("order") == 10);
  CHECK(witness_confirms(r));
  CHECK_THROWS_AS(order_formula_check(PrimePower(5, 2), 5), PreconditionError);
  CHECK_THROWS_AS(order_formula_check(PrimePower(5, 2), 1), PreconditionError);

  for (u64 p : {3u, 5u, 7u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      for (u64 n = 2; n <= 10; ++n) {
        if (n % p == 0) continue;
        const auto o = order_formula_check(pp, n);
        CHECK(o.witness->value("order") == oracle::order(oracle::power(p - 1, n, pp.modulus()),
                                                         pp.modulus()));
        CHECK(o.verdict == Verdict::holds);
      }
    }
  }
}
