#pragma once

/**
 * @file elgamal.hpp
 * @brief Toy-size ElGamal signatures and the fixed-s2 forgery.
 *
 * Signing:   s1 = g^y mod p,  s2 = y^-1 (msg - x s1) mod (p - 1).
 * Verifying: h^s1 * s1^s2 == g^msg (mod p).
 *
 * Fixing s2 and solving for s1 turns verification into the Lambert
 * congruence s1 * a^s1 = b (mod p) with a = h^(s2^-1), b = g^(msg s2^-1).
 * Its solutions in the extended window {1..p m} forge signatures against
 * any verifier that does not bound s1 by p - 1.
 */

#include <vector>

#include "dlambert/modarith.hpp"

namespace dlambert {

struct ElGamalParams {
  ElGamalParams(u64 p, u64 g);

  u64 p;
  u64 g;
};

struct ElGamalKeypair {
  ElGamalParams params;
  u64 x_priv;
  u64 h;
};

struct Signature {
  u64 s1;
  u64 s2;

  bool operator==(const Signature&) const = default;
};

enum class RangePolicy { strict, extended };

ElGamalKeypair keygen(const ElGamalParams& params, u64 x_priv);

Signature sign(const ElGamalKeypair& keypair, i64 msg, u64 y);

bool verify(const ElGamalParams& params, u64 h, i64 msg, const Signature& sig,
            RangePolicy policy);

/// The Lambert instance behind a fixed-s2 forgery.
struct ForgeryReduction {
  u64 s2_inv;  ///< s2^-1 mod (p - 1)
  u64 a;       ///< h^(s2^-1) mod p
  u64 b;       ///< g^(msg s2^-1) mod p
};

ForgeryReduction reduce_fixed_s2(const ElGamalParams& params, u64 h, i64 msg, u64 s2);

/// One signature (s1, s2) per solution s1 in {1..p m}, m = ord_p(a).
std::vector<Signature> forge_fixed_s2(const ElGamalParams& params, u64 h, i64 msg, u64 s2);

}  // namespace dlambert
