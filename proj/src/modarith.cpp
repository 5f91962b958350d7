#include "dlambert/modarith.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace dlambert {

namespace {

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

void Residue::throw_modulus_mismatch(u64 a, u64 b) {
  throw DegenerateInput("residues with different moduli: " + std::to_string(a) + " and " +
                        std::to_string(b));
}

Residue Residue::reduce_to(u64 divisor) const {
  if (divisor == 0 || modulus_ % divisor != 0) {
    throw DegenerateInput(std::to_string(divisor) + " does not divide modulus " +
                          std::to_string(modulus_));
  }
  return Residue(value_ % divisor, divisor);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 checked_pow(u64 p, unsigned k) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (static_cast<u128>(r) * p >= kValueLimit) {
      throw ValidationError(std::to_string(p) + "^" + std::to_string(k) +
                            " does not fit in 63 bits");
    }
    r *= p;
  }
  return r;
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

PrimePower::PrimePower(u64 p, unsigned e) : p_(p), e_(e) {
  if (p < 3 || !is_prime(p)) {
    throw ValidationError("p must be an odd prime");
  }
  if (e < 1) {
    throw ValidationError("e must be at least 1");
  }
  // Working precision for the p-adic series needs four extra digits.
  checked_pow(p, e + 4);
  modulus_ = checked_pow(p, e);
}

u64 PrimePower::power(unsigned k) const {
  if (k > e_ + 4) {
    throw DegenerateInput("p^k requested beyond working precision");
  }
  return checked_pow(p_, k);
}

EgcdResult egcd(i64 a, i64 b) {
  if (a == 0 && b == 0) {
    throw DegenerateInput("egcd(0, 0) is undefined");
  }
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

Residue mod_pow(const Residue& base, u64 exp) {
  return Residue(pow_mod(base.value(), exp, base.modulus()), base.modulus());
}

Residue mod_inv(const Residue& a) {
  const u64 m = a.modulus();
  if (m == 1) return Residue(0, 1);
  const auto [g, u, v] = egcd(static_cast<i64>(a.value()), static_cast<i64>(m));
  (void)v;
  if (g != 1) {
    throw NotInvertible(a.value(), m, static_cast<u64>(g));
  }
  return Residue(u, m);
}

Residue crt_pair(const Residue& r1, const Residue& r2) {
  const u64 m1 = r1.modulus();
  const u64 m2 = r2.modulus();
  if (gcd(m1, m2) != 1) {
    throw DegenerateInput("crt_pair needs coprime moduli, got " + std::to_string(m1) +
                          " and " + std::to_string(m2));
  }
  if (static_cast<u128>(m1) * m2 >= kValueLimit) {
    throw DegenerateInput("crt_pair: combined modulus exceeds 63 bits");
  }
  const u64 m = m1 * m2;
  // x = r1 + m1 * ((r2 - r1) * m1^-1 mod m2)
  const Residue step = (r2 - Residue(r1.value(), m2)) * mod_inv(Residue(m1, m2));
  return Residue(r1.value() + m1 * step.value(), m);
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k != 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& [q, k] : factorize(n)) {
    (void)k;
    phi = phi / q * (q - 1);
  }
  return phi;
}

u64 mult_order(const Residue& g) {
  const u64 m = g.modulus();
  if (gcd(g.value(), m) != 1) {
    throw NotInvertible(g.value(), m, gcd(g.value(), m));
  }
  u64 order = euler_phi(m);
  for (const auto& [q, k] : factorize(order)) {
    for (unsigned i = 0; i < k; ++i) {
      if (pow_mod(g.value(), order / q, m) != 1 % m) break;
      order /= q;
    }
  }
  return order;
}

bool is_generator(const Residue& g) {
  return mult_order(g) == euler_phi(g.modulus());
}

Residue find_generator(const PrimePower& pp) {
  const u64 m = pp.modulus();
  const u64 phi = pp.phi();
  for (u64 candidate = 2; candidate < m; ++candidate) {
    if (candidate % pp.p() == 0) continue;
    if (mult_order(Residue(candidate, m)) == phi) return Residue(candidate, m);
  }
  // Odd prime powers are cyclic, so this is unreachable.
  throw InvariantViolation("no generator found modulo " + std::to_string(m));
}

std::optional<u64> bsgs_dlog(const Residue& g, const Residue& h, u64 order) {
  if (g.modulus() != h.modulus()) {
    throw DegenerateInput("residues with different moduli: " + std::to_string(g.modulus()) +
                          " and " + std::to_string(h.modulus()));
  }
  if (order == 0) throw DegenerateInput("bsgs_dlog: order must be positive");
  const u64 m = g.modulus();
  const u64 step = isqrt(order - 1) + 1;  // step^2 >= order

  std::unordered_map<u64, u64> baby;
  baby.reserve(step);
  u64 cur = 1 % m;
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(cur, j);  // keeps the smallest j per value
    cur = mul_mod(cur, g.value(), m);
  }

  const u64 giant = mod_inv(mod_pow(g, step)).value();
  u64 gamma = h.value();
  for (u64 i = 0; i < step; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) {
      const u64 x = i * step + it->second;
      if (x < order) return x;
      return std::nullopt;
    }
    gamma = mul_mod(gamma, giant, m);
  }
  return std::nullopt;
}

}  // namespace dlambert
