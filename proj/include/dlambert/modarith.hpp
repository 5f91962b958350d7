#pragma once

/**
 * @file modarith.hpp
 * @brief Exact modular arithmetic over 64-bit unsigned integers.
 *
 * Every value handled here is below 2^63. Products go through a 128-bit
 * intermediate before reduction, so no operation overflows as long as the
 * modulus respects that bound.
 */

#include <concepts>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dlambert/errors.hpp"

namespace dlambert {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kValueLimit = u64{1} << 63;

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  // Operands below 2^32 multiply exactly in 64 bits.
  if (((a | b) >> 32) == 0) return a * b % m;
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  for (; exp != 0; exp >>= 1) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
  }
  return result;
}

/// Reduces a signed integer into [0, m).
constexpr u64 reduce_signed(i64 value, u64 m) {
  if (value >= 0) return static_cast<u64>(value) % m;
  // -(value + 1) avoids negating INT64_MIN.
  const u64 magnitude = static_cast<u64>(-(value + 1)) + 1;
  const u64 r = magnitude % m;
  return r == 0 ? 0 : m - r;
}

/// A congruence class, stored as its least non-negative representative.
class Residue {
 public:
  template <std::integral T>
  constexpr Residue(T value, u64 modulus) : modulus_(checked_modulus(modulus)) {
    if constexpr (std::is_signed_v<T>) {
      value_ = reduce_signed(static_cast<i64>(value), modulus_);
    } else {
      value_ = static_cast<u64>(value) % modulus_;
    }
  }

  constexpr u64 value() const { return value_; }
  constexpr u64 modulus() const { return modulus_; }

  constexpr bool operator==(const Residue&) const = default;

  Residue operator+(const Residue& o) const {
    require_same_modulus(o);
    const u64 s = value_ + o.value_;  // both < 2^63
    return Residue(Reduced{}, s >= modulus_ ? s - modulus_ : s, modulus_);
  }
  Residue operator-(const Residue& o) const {
    require_same_modulus(o);
    return Residue(Reduced{},
                   value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_),
                   modulus_);
  }
  Residue operator*(const Residue& o) const {
    require_same_modulus(o);
    return Residue(Reduced{}, mul_mod(value_, o.value_, modulus_), modulus_);
  }
  Residue operator-() const {
    return Residue(Reduced{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
  }

  /// Reduction to a divisor of the modulus, e.g. from p^e down to p.
  Residue reduce_to(u64 divisor) const;

 private:
  // value already lies in [0, modulus).
  struct Reduced {};
  constexpr Residue(Reduced, u64 value, u64 modulus) : value_(value), modulus_(modulus) {}

  void require_same_modulus(const Residue& o) const {
    if (o.modulus_ != modulus_) throw_modulus_mismatch(modulus_, o.modulus_);
  }
  [[noreturn]] static void throw_modulus_mismatch(u64 a, u64 b);

  static constexpr u64 checked_modulus(u64 m) {
    if (m == 0 || m >= kValueLimit) {
      throw DegenerateInput("modulus must lie in [1, 2^63)");
    }
    return m;
  }

  u64 value_ = 0;
  u64 modulus_ = 1;
};

/// An odd prime p together with an exponent e, such that p^(e+4) < 2^63.
class PrimePower {
 public:
  PrimePower(u64 p, unsigned e);

  u64 p() const { return p_; }
  unsigned e() const { return e_; }
  u64 modulus() const { return modulus_; }
  /// p^k for 0 <= k <= e + 4.
  u64 power(unsigned k) const;
  /// phi(p^e) = p^(e-1) (p - 1).
  u64 phi() const { return power(e_ - 1) * (p_ - 1); }

  bool operator==(const PrimePower&) const = default;

 private:
  u64 p_;
  unsigned e_;
  u64 modulus_;
};

bool is_prime(u64 n);

/// p^k, throwing when the result would reach 2^63.
u64 checked_pow(u64 p, unsigned k);

/// Exponent of p in n (n > 0).
unsigned valuation(u64 n, u64 p);

struct EgcdResult {
  i64 g;
  i64 u;
  i64 v;
};

/// g = gcd(a, b) >= 0 together with Bezout coefficients a*u + b*v = g.
EgcdResult egcd(i64 a, i64 b);

u64 gcd(u64 a, u64 b);

Residue mod_pow(const Residue& base, u64 exp);
Residue mod_inv(const Residue& a);

/// Combines x = r1 (mod m1) and x = r2 (mod m2) for coprime m1, m2.
Residue crt_pair(const Residue& r1, const Residue& r2);

/// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
u64 euler_phi(u64 n);

/// Least k >= 1 with g^k = 1 modulo g's modulus.
u64 mult_order(const Residue& g);

bool is_generator(const Residue& g);
/// Smallest generator >= 2 modulo p^e.
Residue find_generator(const PrimePower& pp);

/// Least x >= 0 with g^x = h, given the order of g. Baby-step giant-step.
std::optional<u64> bsgs_dlog(const Residue& g, const Residue& h, u64 order);

}  // namespace dlambert
