#include "dlambert/patterns.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace dlambert {

namespace {

constexpr std::array<std::pair<PatternId, const char*>, 9> kPatternNames{{
    {PatternId::c_prime_bijection, "c_prime_bijection"},
    {PatternId::sum_mod_p, "sum_mod_p"},
    {PatternId::sum_mod_m, "sum_mod_m"},
    {PatternId::conjecture_A, "conjecture_A"},
    {PatternId::conjecture_B, "conjecture_B"},
    {PatternId::inverse_identity, "inverse_identity"},
    {PatternId::negation_identity, "negation_identity"},
    {PatternId::special_pair, "special_pair"},
    {PatternId::order_formula, "order_formula"},
}};

constexpr u64 kUnmatched = ~u64{0};

Verdict verdict_of(bool ok) { return ok ? Verdict::holds : Verdict::fails; }

u128 sum_of(const std::vector<u64>& xs) {
  u128 s = 0;
  for (u64 x : xs) s += x;
  return s;
}

u64 mod128(u128 value, u64 m) { return static_cast<u64>(value % m); }

// i -> index k of the unique solution with the same residue mod p, or
// kUnmatched when there is none or more than one.
std::vector<u64> match_mod_p(const std::vector<u64>& solutions,
                             const std::vector<u64>& partners, u64 p) {
  std::vector<u64> out;
  out.reserve(partners.size());
  for (u64 y : partners) {
    u64 found = kUnmatched;
    unsigned hits = 0;
    for (std::size_t k = 0; k < solutions.size(); ++k) {
      if (solutions[k] % p == y % p) {
        found = k;
        ++hits;
      }
    }
    out.push_back(hits == 1 ? found : kUnmatched);
  }
  return out;
}

bool is_bijection(const std::vector<u64>& matching, std::size_t size) {
  if (matching.size() != size) return false;
  std::set<u64> seen;
  for (u64 k : matching) {
    if (k == kUnmatched || !seen.insert(k).second) return false;
  }
  return true;
}

// Every listed x solves x g^x = c mod p^e, avoids multiples of p, lies in
// {1..bound}, the list has `count` entries and they are distinct mod `classes`.
bool solutions_check_out(const std::vector<u64>& xs, u64 p, u64 modulus, u64 g, u64 c,
                         u64 count, u64 classes, u64 bound) {
  if (xs.size() != count) return false;
  std::set<u64> seen;
  for (u64 x : xs) {
    if (x < 1 || x > bound || x % p == 0) return false;
    if (!satisfies(x, g, c, modulus)) return false;
    if (!seen.insert(x % classes).second) return false;
  }
  return true;
}

bool sum_verdict_mod(u128 sum, u64 modulus, u64 m_p, u64 m_pe) {
  if (mod128(sum, modulus) != 0) return false;
  return m_p % 2 == 0 || mod128(sum, m_pe) == 0;
}

}  // namespace

const char* to_string(PatternId id) {
  for (const auto& [key, name] : kPatternNames) {
    if (key == id) return name;
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

std::optional<PatternId> parse_pattern_id(std::string_view name) {
  for (const auto& [key, text] : kPatternNames) {
    if (name == text) return key;
  }
  return std::nullopt;
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::not_applicable}) {
    if (name == to_string(v)) return v;
  }
  return std::nullopt;
}

u128 Witness::value(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw PreconditionError("witness has no value '" + key + "'");
  return it->second;
}

std::string to_decimal(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

OrderPair order_pair(const PrimePower& pp, const Residue& g) {
  return {mult_order(g.reduce_to(pp.p())), mult_order(g)};
}

u64 solution_in_class(const SolutionSet& set, u64 j) {
  const u64 m = set.instance.m();
  for (u64 x : set.solutions) {
    if (x % m == j % m) return x;
  }
  throw InvariantViolation("no solution in class " + std::to_string(j) + " mod " +
                           std::to_string(m));
}

PatternReport check_c_prime_bijection(const DwpInstance& instance, u64 j,
                                      std::optional<u64> c_prime) {
  const auto& pp = instance.prime_power();
  const u64 p = pp.p();
  const u64 m = instance.m();
  if (j < 1 || j > m) {
    throw PreconditionError("j must lie in 1.." + std::to_string(m));
  }
  const SolutionSet s_c = solve_all(instance);
  const u64 x_j = solution_in_class(s_c, j);

  const u64 chosen = c_prime.value_or(x_j % p);
  if (chosen % p != x_j % p) {
    throw PreconditionError("c' must be congruent to x_j = " + std::to_string(x_j) +
                            " mod p");
  }
  const SolutionSet s_cp =
      solve_all(DwpInstance(pp, static_cast<i64>(instance.g().value()), static_cast<i64>(chosen)));

  Witness w;
  w.solutions = s_c.solutions;
  w.partner_solutions = s_cp.solutions;
  w.matching = match_mod_p(w.solutions, w.partner_solutions, p);
  w.values = {{"c_prime", chosen}, {"x_j", x_j}, {"m", m}};

  PatternReport r{PatternId::c_prime_bijection,
                  {p, pp.e(), instance.g().value(), instance.c().value(), j},
                  verdict_of(is_bijection(w.matching, w.solutions.size())),
                  std::move(w)};
  return r;
}

std::pair<PatternReport, PatternReport> check_sums(const DwpInstance& instance) {
  const auto& pp = instance.prime_power();
  const u64 p = pp.p();
  const u64 m = instance.m();
  const SolutionSet set = solve_all(instance);
  const u128 sum = sum_of(set.solutions);
  const PatternInput input{p, pp.e(), instance.g().value(), instance.c().value(), std::nullopt};

  Witness w;
  w.solutions = set.solutions;
  w.values = {{"sum", sum}, {"m", m}, {"sum_mod_p", mod128(sum, p)}, {"sum_mod_m", mod128(sum, m)}};

  // With m = 1 the geometric-series argument divides by 1 - g = 0 mod p.
  const Verdict mod_p = m == 1 ? Verdict::not_applicable : verdict_of(mod128(sum, p) == 0);
  const Verdict mod_m = m % 2 == 1 ? verdict_of(mod128(sum, m) == 0) : Verdict::not_applicable;

  return {PatternReport{PatternId::sum_mod_p, input, mod_p, w},
          PatternReport{PatternId::sum_mod_m, input, mod_m, std::move(w)}};
}

u128 extended_sum(const std::vector<u64>& base_solutions, u64 modulus, u64 m_p, u64 m_pe) {
  const u128 translates = m_pe / m_p;
  const u128 period = static_cast<u128>(modulus) * m_p;
  const u128 count = base_solutions.size();
  // sum_{k<T} sum_i (x_i + k * period)
  return translates * sum_of(base_solutions) + count * period * (translates * (translates - 1) / 2);
}

std::pair<PatternReport, PatternReport> check_conjecture(const DwpInstance& instance) {
  const auto& pp = instance.prime_power();
  const u64 modulus = pp.modulus();
  const OrderPair orders = order_pair(pp, instance.g());
  const SolutionSet set = solve_all(instance);
  const PatternInput input{pp.p(), pp.e(), instance.g().value(), instance.c().value(),
                           std::nullopt};

  const u128 sum_a = sum_of(set.solutions);
  const u128 sum_b = extended_sum(set.solutions, modulus, orders.m_p, orders.m_pe);

  auto make = [&](PatternId id, u128 sum) {
    Witness w;
    w.solutions = set.solutions;
    w.values = {{"sum", sum},
                {"m_p", orders.m_p},
                {"m_pe", orders.m_pe},
                {"translates", id == PatternId::conjecture_A ? 1 : orders.m_pe / orders.m_p},
                {"sum_mod_pe", mod128(sum, modulus)},
                {"sum_mod_m_pe", mod128(sum, orders.m_pe)}};
    return PatternReport{id, input, verdict_of(sum_verdict_mod(sum, modulus, orders.m_p, orders.m_pe)),
                         std::move(w)};
  };
  return {make(PatternId::conjecture_A, sum_a), make(PatternId::conjecture_B, sum_b)};
}

std::pair<PatternReport, PatternReport> check_inverse_negation(const PrimePower& pp, i64 g,
                                                               u64 x) {
  const u64 mod = pp.modulus();
  const Residue base(g, mod);
  if (base.value() % pp.p() == 0) {
    throw PreconditionError("g must not be divisible by p");
  }
  const Residue xr(x, mod);
  const Residue c = xr * mod_pow(base, x);
  const Residue c_inv = xr * mod_pow(mod_inv(base), x);
  const Residue c_neg = xr * mod_pow(-base, x);
  const Residue x_sq = xr * xr;
  const Residue signed_c = x % 2 == 0 ? c : -c;

  Witness w;
  w.values = {{"c", c.value()},         {"c_prime", c_inv.value()}, {"c_dprime", c_neg.value()},
              {"product", (c * c_inv).value()}, {"x_squared", x_sq.value()},
              {"signed_c", signed_c.value()}};
  const PatternInput input{pp.p(), pp.e(), base.value(), c.value(), x};
  return {PatternReport{PatternId::inverse_identity, input, verdict_of(c * c_inv == x_sq), w},
          PatternReport{PatternId::negation_identity, input, verdict_of(c_neg == signed_c),
                        std::move(w)}};
}

PatternReport special_solution_check(const PrimePower& pp, i64 g) {
  const u64 mod = pp.modulus();
  const Residue base(g, mod);
  if (base.value() % pp.p() == 0 || !is_generator(base)) {
    throw PreconditionError("g = " + std::to_string(base.value()) +
                            " is not a generator modulo " + std::to_string(mod));
  }
  const u64 lower = pp.power(pp.e() - 1);
  const u64 x = (mod - lower) / 2;
  const u64 c = (mod + lower) / 2;
  const Residue g_x = mod_pow(base, x);
  const Residue lhs = Residue(x, mod) * g_x;

  Witness w;
  w.values = {{"x", x}, {"c", c}, {"g_pow_x", g_x.value()}, {"lhs", lhs.value()}};
  const bool ok = lhs.value() == c % mod && g_x.value() == mod - 1;
  return {PatternId::special_pair, {pp.p(), pp.e(), base.value(), c, x}, verdict_of(ok),
          std::move(w)};
}

PatternReport order_formula_check(const PrimePower& pp, u64 n) {
  if (n < 2) throw PreconditionError("n must be at least 2");
  if (gcd(pp.p(), n) != 1) throw PreconditionError("gcd(p, n) must be 1");
  const u64 mod = pp.modulus();
  const Residue base = mod_pow(Residue(pp.p() - 1, mod), n);
  const u64 order = mult_order(base);
  const u64 lower = pp.power(pp.e() - 1);
  const u64 expected = n % 2 == 0 ? lower : 2 * lower;

  Witness w;
  w.values = {{"order", order}, {"expected", expected}};
  return {PatternId::order_formula, {pp.p(), pp.e(), base.value(), 0, n},
          verdict_of(order == expected), std::move(w)};
}

bool witness_confirms(const PatternReport& report) {
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  const PatternInput& in = report.input;
  const u64 p = in.p;
  const u64 mod = checked_pow(p, in.e);
  const u64 g = in.g % mod;

  switch (report.id) {
    case PatternId::c_prime_bijection: {
      const u64 m = static_cast<u64>(w.value("m"));
      const u64 c_prime = static_cast<u64>(w.value("c_prime"));
      const u64 x_j = static_cast<u64>(w.value("x_j"));
      if (m != mult_order(Residue(g % p, p))) return false;
      if (!solutions_check_out(w.solutions, p, mod, g, in.c, m, m, mod * m)) return false;
      if (!solutions_check_out(w.partner_solutions, p, mod, g, c_prime, m, m, mod * m)) {
        return false;
      }
      if (std::find(w.solutions.begin(), w.solutions.end(), x_j) == w.solutions.end()) {
        return false;
      }
      if (!in.param || x_j % m != *in.param % m || c_prime % p != x_j % p) return false;
      const auto matching = match_mod_p(w.solutions, w.partner_solutions, p);
      if (matching != w.matching) return false;
      return report.verdict == verdict_of(is_bijection(matching, w.solutions.size()));
    }
    case PatternId::sum_mod_p:
    case PatternId::sum_mod_m: {
      const u64 m = static_cast<u64>(w.value("m"));
      if (m != mult_order(Residue(g % p, p))) return false;
      if (!solutions_check_out(w.solutions, p, mod, g, in.c, m, m, mod * m)) return false;
      const u128 sum = sum_of(w.solutions);
      if (sum != w.value("sum")) return false;
      if (report.id == PatternId::sum_mod_p) {
        if (m == 1) return report.verdict == Verdict::not_applicable;
        return report.verdict == verdict_of(mod128(sum, p) == 0);
      }
      if (m % 2 == 0) return report.verdict == Verdict::not_applicable;
      return report.verdict == verdict_of(mod128(sum, m) == 0);
    }
    case PatternId::conjecture_A:
    case PatternId::conjecture_B: {
      const u64 m_p = mult_order(Residue(g % p, p));
      const u64 m_pe = mult_order(Residue(g, mod));
      if (m_p != w.value("m_p") || m_pe != w.value("m_pe")) return false;
      if (!solutions_check_out(w.solutions, p, mod, g, in.c, m_p, m_p, mod * m_p)) return false;
      u128 sum = sum_of(w.solutions);
      if (report.id == PatternId::conjecture_B) {
        // Walk every translate in the extended window and evaluate it directly.
        const u64 period = mod * m_p;
        sum = 0;
        for (u64 k = 0; k < m_pe / m_p; ++k) {
          for (u64 x : w.solutions) {
            const u64 y = x + k * period;
            if (!satisfies(y, g, in.c, mod)) return false;
            sum += y;
          }
        }
      }
      if (sum != w.value("sum")) return false;
      return report.verdict == verdict_of(sum_verdict_mod(sum, mod, m_p, m_pe));
    }
    case PatternId::inverse_identity:
    case PatternId::negation_identity: {
      if (!in.param) return false;
      const u64 x = *in.param;
      const u64 gx = pow_mod(g, x, mod);
      const u64 c = mul_mod(x % mod, gx, mod);
      const u64 c_prime = mul_mod(x % mod, pow_mod(mod_inv(Residue(g, mod)).value(), x, mod), mod);
      const u64 c_dprime = mul_mod(x % mod, pow_mod(mod - g, x, mod), mod);
      if (c != w.value("c") || c_prime != w.value("c_prime") || c_dprime != w.value("c_dprime")) {
        return false;
      }
      if (report.id == PatternId::inverse_identity) {
        return report.verdict == verdict_of(mul_mod(c, c_prime, mod) == mul_mod(x % mod, x % mod, mod));
      }
      const u64 signed_c = (x % 2 == 0 || c == 0) ? c : mod - c;
      return report.verdict == verdict_of(c_dprime == signed_c);
    }
    case PatternId::special_pair: {
      const u64 lower = mod / p;
      const u64 x = (mod - lower) / 2;
      const u64 c = (mod + lower) / 2;
      if (x != w.value("x") || c != w.value("c") || in.c != c) return false;
      const u64 gx = pow_mod(g, x, mod);
      const bool ok = mul_mod(x, gx, mod) == c && gx == mod - 1;
      return report.verdict == verdict_of(ok);
    }
    case PatternId::order_formula: {
      if (!in.param) return false;
      const u64 n = *in.param;
      const u64 base = pow_mod(p - 1, n, mod);
      if (base != g) return false;
      // Smallest k with base^k = 1, by repeated multiplication.
      u64 k = 1;
      for (u64 acc = base; acc != 1 % mod; acc = mul_mod(acc, base, mod)) ++k;
      const u64 lower = mod / p;
      const u64 expected = n % 2 == 0 ? lower : 2 * lower;
      return k == w.value("order") && report.verdict == verdict_of(k == expected);
    }
  }
  return false;
}

}  // namespace dlambert
