#include <doctest.h>

#include <array>
#include <limits>

#include "dlambert/modarith.hpp"
#include "oracles.hpp"

using namespace dlambert;

TEST_CASE("residues normalise negative inputs") {
  CHECK(Residue(-1, 7).value() == 6);
  CHECK(Residue(-14, 7).value() == 0);
  CHECK(Residue(std::numeric_limits<i64>::min(), 5).value() ==
        static_cast<u64>((std::numeric_limits<i64>::min() % 5 + 5) % 5));
  CHECK(Residue(12u, 5).value() == 2);
  CHECK_THROWS_AS(Residue(1, 0), DegenerateInput);
  CHECK_THROWS_AS(Residue(1, 5) * Residue(1, 7), DegenerateInput);
}

TEST_CASE("prime power validation") {
  CHECK(PrimePower(5, 2).modulus() == 25);
  CHECK_THROWS_AS(PrimePower(4, 1), ValidationError);
  CHECK_THROWS_AS(PrimePower(2, 1), ValidationError);
  CHECK_THROWS_AS(PrimePower(9, 1), ValidationError);
  CHECK_THROWS_AS(PrimePower(3, 0), ValidationError);
  // 3^39 < 2^63 < 3^40.
  CHECK_NOTHROW(PrimePower(3, 35));
  CHECK_THROWS_AS(PrimePower(3, 36), ValidationError);
}

TEST_CASE("egcd") {
  auto r = egcd(4, 6);
  CHECK(r.g == 2);
  CHECK(r.u == -1);
  CHECK(r.v == 1);

  r = egcd(1, 0);
  CHECK(r.g == 1);
  CHECK(r.u == 1);
  CHECK(r.v == 0);

  r = egcd(35, 15);
  CHECK(r.g == 5);
  CHECK(35 * r.u + 15 * r.v == 5);

  r = egcd(-12, 18);
  CHECK(r.g == 6);
  CHECK(-12 * r.u + 18 * r.v == 6);

  CHECK_THROWS_AS(egcd(0, 0), DegenerateInput);
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(Residue(2, 5), 0).value() == 1);
  CHECK(mod_pow(Residue(2, 5), 13).value() == oracle::power(2, 13, 5));
  CHECK(mod_pow(Residue(2, 5), 13).value() == 2);
  CHECK(mod_pow(Residue(16, 25), 5).value() == 1);

  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const u64 m = 2 + rng.below(5000);
    const u64 b = rng.below(m);
    const u64 e = rng.below(300);
    CHECK(mod_pow(Residue(b, m), e).value() == oracle::power(b, e, m));
  }
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(Residue(1, 9)).value() == 1);
  CHECK(mod_inv(Residue(7, 25)).value() == 18);
  CHECK(mod_inv(Residue(2, 7)).value() == 4);

  try {
    mod_inv(Residue(10, 25));
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& ex) {
    CHECK(ex.gcd() == 5);
  }

  // Full scans of every unit for small prime powers.
  for (u64 m : {9u, 25u, 27u, 49u, 121u, 125u, 169u, 343u}) {
    for (u64 a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) {
        CHECK_THROWS_AS(mod_inv(Residue(a, m)), NotInvertible);
        continue;
      }
      const Residue inv = mod_inv(Residue(a, m));
      CHECK((inv * Residue(a, m)).value() == 1);
      CHECK(inv.value() == *oracle::inverse(a, m));
    }
  }
}

TEST_CASE("crt_pair") {
  CHECK(crt_pair(Residue(0, 4), Residue(0, 5)) == Residue(0, 20));
  CHECK(crt_pair(Residue(1, 4), Residue(3, 5)) == Residue(13, 20));
  CHECK(crt_pair(Residue(2, 4), Residue(4, 5)) == Residue(14, 20));
  CHECK_THROWS_AS(crt_pair(Residue(1, 4), Residue(1, 6)), DegenerateInput);

  for (u64 m1 = 1; m1 <= 24; ++m1) {
    for (u64 m2 = 1; m2 <= 24; ++m2) {
      if (gcd(m1, m2) != 1) continue;
      for (u64 a = 0; a < m1; ++a) {
        for (u64 b = 0; b < m2; ++b) {
          const Residue x = crt_pair(Residue(a, m1), Residue(b, m2));
          REQUIRE(x.modulus() == m1 * m2);
          CHECK(x.value() % m1 == a);
          CHECK(x.value() % m2 == b);
        }
      }
    }
  }
}

TEST_CASE("mult_order") {
  CHECK(mult_order(Residue(2, 5)) == 4);
  CHECK(mult_order(Residue(2, 9)) == 6);
  CHECK(mult_order(Residue(1, 125)) == 1);
  CHECK_THROWS_AS(mult_order(Residue(3, 9)), NotInvertible);

  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      const u64 mod = pp.modulus();
      for (u64 g = 1; g < mod; ++g) {
        if (g % p == 0) continue;
        const u64 ord = mult_order(Residue(g, mod));
        CHECK(pp.phi() % ord == 0);
        CHECK(pow_mod(g, ord, mod) == 1);
        for (const auto& [q, k] : factorize(ord)) {
          (void)k;
          CHECK(pow_mod(g, ord / q, mod) != 1);
        }
      }
    }
  }
  for (u64 g = 1; g < 49; ++g) {
    if (g % 7 != 0) CHECK(mult_order(Residue(g, 49)) == oracle::order(g, 49));
  }
}

TEST_CASE("Euler's theorem on random units") {
  oracle::Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    const u64 p = std::array<u64, 6>{3, 5, 7, 11, 13, 17}[rng.below(6)];
    const PrimePower pp(p, 1 + static_cast<unsigned>(rng.below(4)));
    u64 a = 1 + rng.below(pp.modulus() - 1);
    if (a % p == 0) ++a;
    CHECK(mod_pow(Residue(a, pp.modulus()), pp.phi()).value() == 1);
  }
}

TEST_CASE("generators") {
  CHECK(is_generator(Residue(2, 5)));
  CHECK_FALSE(is_generator(Residue(1, 7)));
  CHECK_FALSE(is_generator(Residue(2, 7)));
  CHECK(find_generator(PrimePower(7, 1)).value() == 3);
  CHECK(find_generator(PrimePower(5, 2)).value() == 2);
  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      const Residue g = find_generator(pp);
      CHECK(oracle::order(g.value(), pp.modulus()) == pp.phi());
      for (u64 smaller = 2; smaller < g.value(); ++smaller) {
        if (smaller % p != 0) CHECK(oracle::order(smaller, pp.modulus()) != pp.phi());
      }
    }
  }
}

TEST_CASE("bsgs_dlog") {
  const Residue g(2, 5);
  CHECK(bsgs_dlog(g, g, 4) == 1);
  CHECK(bsgs_dlog(g, Residue(3, 5), 4) == 3);
  CHECK(bsgs_dlog(g, Residue(1, 5), 4) == 0);
  CHECK_FALSE(bsgs_dlog(Residue(4, 5), Residue(2, 5), 2).has_value());

  oracle::Rng rng(3);
  for (u64 m : {27u, 125u, 343u, 1331u, 2197u, 4913u}) {
    for (int i = 0; i < 40; ++i) {
      u64 base = 2 + rng.below(m - 2);
      if (gcd(base, m) != 1) continue;
      const u64 ord = mult_order(Residue(base, m));
      const u64 x = rng.below(10 * ord);
      const auto found = bsgs_dlog(Residue(base, m), mod_pow(Residue(base, m), x), ord);
      REQUIRE(found.has_value());
      CHECK(*found == x % ord);
    }
  }
}
