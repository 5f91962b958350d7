#include "dlambert/padic.hpp"

#include <string>

namespace dlambert {

namespace {

void require_modulus(const PrimePower& pp, const Residue& r) {
  if (r.modulus() != pp.modulus()) {
    throw DegenerateInput("residue modulus " + std::to_string(r.modulus()) +
                          " differs from p^e = " + std::to_string(pp.modulus()));
  }
}

void require_unit(const PrimePower& pp, const Residue& g) {
  require_modulus(pp, g);
  if (g.value() % pp.p() == 0) {
    throw NotInvertible(g.value(), pp.modulus(), gcd(g.value(), pp.modulus()));
  }
}

void require_one_unit(const PrimePower& pp, const Residue& u) {
  require_modulus(pp, u);
  if (u.value() % pp.p() != 1 % pp.p()) {
    throw DomainError("expected a residue congruent to 1 mod p, got " +
                      std::to_string(u.value()));
  }
}

}  // namespace

PadicSeriesBudget series_budget(const PrimePower& pp) {
  const unsigned terms = 2 * pp.e();
  unsigned extra = 0;
  for (u64 q = pp.p(); q <= terms; q *= pp.p()) ++extra;
  return {terms, pp.e() + extra};
}

Residue teichmuller(const PrimePower& pp, const Residue& g) {
  require_unit(pp, g);
  return mod_pow(g, pp.power(pp.e() - 1));
}

Residue one_unit_part(const PrimePower& pp, const Residue& g) {
  return g * mod_inv(teichmuller(pp, g));
}

TeichDecomposition decompose(const PrimePower& pp, const Residue& g) {
  const Residue omega = teichmuller(pp, g);
  return {g, omega, g * mod_inv(omega)};
}

// Sum of (-1)^(k+1) t^k / k, t = u - 1. The numerators are carried modulo
// p^W with W = e + floor(log_p K), so dividing out the p-part of k still
// leaves at least e correct digits.
Residue padic_log(const PrimePower& pp, const Residue& u) {
  require_one_unit(pp, u);
  const auto budget = series_budget(pp);
  const u64 p = pp.p();
  const u64 wide = pp.power(budget.working_exponent);
  const u64 mod = pp.modulus();
  const u64 t = u.value() - 1;

  Residue sum(0, mod);
  u64 numerator = 1;
  for (unsigned k = 1; k <= budget.term_count; ++k) {
    numerator = mul_mod(numerator, t, wide);
    const unsigned v = valuation(k, p);
    const u64 p_part = pp.power(v);
    if (numerator % p_part != 0) {
      throw InvariantViolation("log term not divisible by p-part of k");
    }
    const Residue term = Residue(numerator / p_part, mod) * mod_inv(Residue(k / p_part, mod));
    sum = (k % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

// Sum of t^k / k!, written as s^k * p^(k - v_p(k!)) / unit(k!) with s = t/p.
// k - v_p(k!) >= 1 for k >= 1, so every term is exact modulo p^e.
Residue padic_exp(const PrimePower& pp, const Residue& t) {
  require_modulus(pp, t);
  const u64 p = pp.p();
  if (t.value() % p != 0) {
    throw DomainError("exp needs an argument divisible by p, got " +
                      std::to_string(t.value()));
  }
  const auto budget = series_budget(pp);
  const u64 mod = pp.modulus();
  const u64 s = t.value() / p;

  Residue sum(1, mod);
  u64 s_power = 1 % mod;
  u64 fact_unit = 1 % mod;
  unsigned fact_val = 0;
  for (unsigned k = 1; k <= budget.term_count; ++k) {
    s_power = mul_mod(s_power, s, mod);
    const unsigned v = valuation(k, p);
    fact_val += v;
    fact_unit = mul_mod(fact_unit, (k / checked_pow(p, v)) % mod, mod);
    const unsigned shift = k - fact_val;
    if (shift >= pp.e()) continue;
    const u64 scaled = mul_mod(s_power, pp.power(shift), mod);
    sum = sum + Residue(scaled, mod) * mod_inv(Residue(fact_unit, mod));
  }
  return sum;
}

Residue one_unit_power(const PrimePower& pp, const Residue& u, i64 x) {
  require_one_unit(pp, u);
  const u64 period = pp.power(pp.e() - 1);
  return mod_pow(u, reduce_signed(x, period));
}

}  // namespace dlambert
