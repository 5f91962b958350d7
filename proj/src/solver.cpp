#include "dlambert/solver.hpp"

#include <algorithm>
#include <string>

namespace dlambert {

namespace {

// Per-instance state shared by every lift: the split of g, <g>^(p^k) for
// k < e, and the CRT coefficient for recombining with x mod m.
class Lifter {
 public:
  explicit Lifter(const DwpInstance& inst)
      : inst_(inst),
        pp_(inst.prime_power()),
        mod_(pp_.modulus()),
        split_(decompose(pp_, inst.g())),
        omega_inv_(mod_inv(split_.omega)) {
    const u64 p = pp_.p();
    use_table_ = p <= kTablePrimeLimit;
    powers_.reserve(pp_.e());
    unit_steps_.reserve(pp_.e());
    if (use_table_) digit_powers_.reserve(p * pp_.e());
    Residue step = split_.one_unit;
    for (unsigned k = 0; k < pp_.e(); ++k) {
      powers_.push_back(pp_.power(k));
      unit_steps_.push_back(step);
      if (use_table_) {
        Residue acc(1, mod_);
        for (u64 t = 0; t < p; ++t) {
          digit_powers_.push_back(acc);
          acc = acc * step;
        }
        step = acc;
      } else {
        step = mod_pow(step, p);
      }
    }
    const u64 m = inst.m();
    mod_inv_m_ = m == 1 ? 0 : mod_inv(Residue(mod_ % m, m)).value();
  }

  const Residue& omega() const { return split_.omega; }
  const Residue& omega_inv() const { return omega_inv_; }

  /// x with x = x1 (mod p^e), x = x0 (mod m), in 1..p^e m.
  u64 combine(u64 x0, u64 x1) const {
    const u64 m = inst_.m();
    const u64 t = mul_mod((x0 % m + m - x1 % m) % m, mod_inv_m_, m);
    const u64 x = x1 % mod_ + mod_ * t;
    return x == 0 ? mod_ * m : x;
  }

  /// Lifts root a (mod p) of x omega_x0 <g>^x - c; a must be a unit mod p.
  u64 lift(const Residue& omega_x0, u64 a) const {
    const u64 p = pp_.p();
    const u64 d = omega_x0.value() % p;
    if (d == 0) {
      throw InvariantViolation("hensel_lift: derivative vanishes mod p");
    }
    const u64 d_inv = pow_mod(d, p - 2, p);
    const u64 c = inst_.c().value();

    u64 x = a % mod_;
    Residue unit_x = x < pp_.p() ? step_power(0, x)
                                 : one_unit_power(pp_, split_.one_unit, static_cast<i64>(x));
    for (unsigned k = 1; k < pp_.e(); ++k) {
      const u64 pk = powers_[k];
      const u64 value = residual(omega_x0, unit_x, x, c);
      if (value % pk != 0) {
        throw InvariantViolation("hensel_lift: lost root at step " + std::to_string(k));
      }
      const u64 digit = (p - mul_mod((value / pk) % p, d_inv, p)) % p;
      x += digit * pk;
      unit_x = unit_x * step_power(k, digit);
    }
    if (residual(omega_x0, unit_x, x, c) != 0) {
      throw InvariantViolation("hensel_lift: result is not a root mod p^e");
    }
    return x == 0 ? mod_ : x;
  }

  /// Validating entry point for an arbitrary class x0 and candidate root a.
  u64 lift_checked(u64 x0, u64 a) const {
    const u64 p = pp_.p();
    if (a % p == 0) {
      throw PreconditionError("hensel_lift: root must be nonzero mod p");
    }
    const Residue omega_x0 = mod_pow(split_.omega, x0);
    const Residue unit_a = one_unit_power(pp_, split_.one_unit, static_cast<i64>(a % mod_));
    if (residual(omega_x0, unit_a, a % mod_, inst_.c().value()) % p != 0) {
      throw PreconditionError("hensel_lift: " + std::to_string(a) +
                              " is not a root mod p for class " + std::to_string(x0));
    }
    return lift(omega_x0, a);
  }

 private:
  // Per-digit power tables cost p * e residues per instance.
  static constexpr u64 kTablePrimeLimit = 257;

  // (<g>^(p^k))^t for 0 <= t < p.
  Residue step_power(unsigned k, u64 t) const {
    if (use_table_) return digit_powers_[k * pp_.p() + t];
    return mod_pow(unit_steps_[k], t);
  }

  // (x omega_x0 <g>^x - c) mod p^e, with unit_x = <g>^x.
  u64 residual(const Residue& omega_x0, const Residue& unit_x, u64 x, u64 c) const {
    const u64 lhs = mul_mod(mul_mod(x % mod_, omega_x0.value(), mod_), unit_x.value(), mod_);
    return lhs >= c ? lhs - c : lhs + mod_ - c;
  }

  const DwpInstance& inst_;
  const PrimePower& pp_;
  u64 mod_;
  TeichDecomposition split_;
  Residue omega_inv_;
  std::vector<u64> powers_;
  std::vector<Residue> unit_steps_;  // <g>^(p^k)
  bool use_table_;
  std::vector<Residue> digit_powers_;
  u64 mod_inv_m_;
};

}  // namespace

DwpInstance::DwpInstance(const PrimePower& pp, i64 g, i64 c)
    : pp_(pp), g_(g, pp.modulus()), c_(c, pp.modulus()), m_(1) {
  if (g_.value() % pp.p() == 0) {
    throw ValidationError("g must not be divisible by p");
  }
  if (c_.value() % pp.p() == 0) {
    throw ValidationError("c must not be divisible by p");
  }
  m_ = mult_order(g_.reduce_to(pp.p()));
}

const char* to_string(SolveMethod method) {
  return method == SolveMethod::hensel ? "hensel" : "brute_force";
}

std::vector<std::pair<u64, u64>> SolutionSet::residue_pairs() const {
  std::vector<std::pair<u64, u64>> out;
  out.reserve(solutions.size());
  for (u64 x : solutions) {
    out.emplace_back(x % instance.m(), x % instance.prime_power().modulus());
  }
  return out;
}

SolutionSet solve_mod_p(const DwpInstance& instance) {
  const auto& pp = instance.prime_power();
  if (pp.e() != 1) {
    throw PreconditionError("solve_mod_p requires e = 1");
  }
  const u64 p = pp.p();
  const u64 m = instance.m();
  const Residue g_inv = mod_inv(instance.g());

  SolutionSet out{instance, {}, instance.range_bound(), SolveMethod::hensel};
  out.solutions.reserve(m);
  for (u64 x0 = 1; x0 <= m; ++x0) {
    const Residue x1 = instance.c() * mod_pow(g_inv, x0);
    out.solutions.push_back(crt_pair(Residue(x0, m), Residue(x1.value(), p)).value());
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

u64 hensel_lift(const DwpInstance& instance, u64 x0, u64 a) {
  return Lifter(instance).lift_checked(x0, a);
}

SolutionSet solve_all(const DwpInstance& instance) {
  const u64 m = instance.m();
  const u64 p = instance.prime_power().p();
  const Lifter lifter(instance);

  SolutionSet out{instance, {}, instance.range_bound(), SolveMethod::hensel};
  out.solutions.reserve(m);
  // Class x0 has the root c omega^-x0 mod p; both powers advance one step per class.
  Residue omega_x0 = lifter.omega();
  Residue omega_neg = lifter.omega_inv();
  for (u64 x0 = 1; x0 <= m; ++x0) {
    const u64 a = (instance.c() * omega_neg).value() % p;
    out.solutions.push_back(lifter.combine(x0, lifter.lift(omega_x0, a)));
    omega_x0 = omega_x0 * lifter.omega();
    omega_neg = omega_neg * lifter.omega_inv();
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

SolutionSet brute_force(const DwpInstance& instance, std::optional<u64> upper) {
  const u64 bound = upper.value_or(instance.range_bound());
  const u64 p = instance.prime_power().p();
  const u64 mod = instance.prime_power().modulus();
  const u64 g = instance.g().value();
  const u64 c = instance.c().value();

  SolutionSet out{instance, {}, bound, SolveMethod::brute_force};
  u64 g_power = 1 % mod;
  u64 x_mod = 0;
  for (u64 x = 1; x <= bound; ++x) {
    g_power = mul_mod(g_power, g, mod);
    if (++x_mod == mod) x_mod = 0;
    if (x % p == 0) continue;
    if (mul_mod(x_mod, g_power, mod) == c) out.solutions.push_back(x);
  }
  return out;
}

u64 count_solutions(const DwpInstance& instance) { return instance.m(); }

bool satisfies(u64 x, u64 g, u64 c, u64 modulus) {
  return mul_mod(x % modulus, pow_mod(g, x, modulus), modulus) == c % modulus;
}

}  // namespace dlambert
