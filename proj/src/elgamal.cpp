#include "dlambert/elgamal.hpp"

#include <string>

#include "dlambert/solver.hpp"

namespace dlambert {

ElGamalParams::ElGamalParams(u64 p_, u64 g_) : p(p_), g(g_) {
  if (p < 3 || !is_prime(p)) throw ValidationError("p must be an odd prime");
  if (g % p == 0 || !is_generator(Residue(g, p))) {
    throw ValidationError("g = " + std::to_string(g) + " is not a generator modulo " +
                          std::to_string(p));
  }
  g %= p;
}

ElGamalKeypair keygen(const ElGamalParams& params, u64 x_priv) {
  if (x_priv < 1 || x_priv > params.p - 2) {
    throw ValidationError("private key must lie in 1.." + std::to_string(params.p - 2));
  }
  return {params, x_priv, pow_mod(params.g, x_priv, params.p)};
}

Signature sign(const ElGamalKeypair& keypair, i64 msg, u64 y) {
  const u64 p = keypair.params.p;
  const u64 group = p - 1;
  if (y < 1 || y > p - 2 || gcd(y, group) != 1) {
    throw ValidationError("nonce y = " + std::to_string(y) + " must be a unit mod " +
                          std::to_string(group) + " in 1.." + std::to_string(p - 2));
  }
  const u64 s1 = pow_mod(keypair.params.g, y, p);
  const Residue y_inv = mod_inv(Residue(y, group));
  const Residue s2 = y_inv * (Residue(msg, group) - Residue(keypair.x_priv, group) * Residue(s1, group));
  return {s1, s2.value()};
}

bool verify(const ElGamalParams& params, u64 h, i64 msg, const Signature& sig,
            RangePolicy policy) {
  const u64 p = params.p;
  if (sig.s1 < 1) return false;
  if (policy == RangePolicy::strict && (sig.s1 > p - 1 || sig.s2 >= p - 1)) return false;
  const u64 v1 = mul_mod(pow_mod(h, sig.s1, p), pow_mod(sig.s1 % p, sig.s2, p), p);
  const u64 v2 = pow_mod(params.g, reduce_signed(msg, p - 1), p);
  return v1 == v2;
}

ForgeryReduction reduce_fixed_s2(const ElGamalParams& params, u64 h, i64 msg, u64 s2) {
  const u64 p = params.p;
  const u64 group = p - 1;
  if (gcd(s2 % group, group) != 1) {
    throw ValidationError("s2 = " + std::to_string(s2) + " is not invertible mod " +
                          std::to_string(group));
  }
  const u64 s2_inv = mod_inv(Residue(s2, group)).value();
  const u64 a = pow_mod(h, s2_inv, p);
  const u64 b = pow_mod(params.g, (Residue(msg, group) * Residue(s2_inv, group)).value(), p);
  return {s2_inv, a, b};
}

std::vector<Signature> forge_fixed_s2(const ElGamalParams& params, u64 h, i64 msg, u64 s2) {
  const ForgeryReduction red = reduce_fixed_s2(params, h, msg, s2);
  const DwpInstance instance(PrimePower(params.p, 1), static_cast<i64>(red.a),
                             static_cast<i64>(red.b));
  std::vector<Signature> out;
  for (u64 s1 : solve_all(instance).solutions) {
    out.push_back({s1, s2 % (params.p - 1)});
  }
  return out;
}

}  // namespace dlambert
