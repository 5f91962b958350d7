#include "dlambert/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <ostream>

#include "dlambert/elgamal.hpp"
#include "dlambert/padic.hpp"
#include "dlambert/patterns.hpp"
#include "dlambert/solver.hpp"
#include "dlambert/sweep.hpp"

namespace dlambert {

namespace {

struct InstanceArgs {
  u64 p = 0;
  unsigned e = 1;
  i64 g = 0;
  i64 c = 0;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a, bool with_c = true) {
  cmd->add_option("-p", a.p, "odd prime")->required();
  cmd->add_option("-e", a.e, "exponent (default 1)");
  cmd->add_option("-g", a.g, "base g")->required();
  if (with_c) cmd->add_option("-c", a.c, "target c")->required();
}

std::string join(const std::vector<u64>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

void print_report(std::ostream& out, const PatternReport& r) {
  out << to_string(r.id) << ": " << to_string(r.verdict);
  out << "  [p=" << r.input.p << " e=" << r.input.e << " g=" << r.input.g << " c=" << r.input.c;
  if (r.input.param) out << " param=" << *r.input.param;
  out << "]\n";
  if (!r.witness) return;
  if (!r.witness->solutions.empty()) out << "  solutions: " << join(r.witness->solutions) << "\n";
  if (!r.witness->partner_solutions.empty()) {
    out << "  partner solutions: " << join(r.witness->partner_solutions) << "\n";
  }
  for (const auto& [key, value] : r.witness->values) {
    out << "  " << key << " = " << to_decimal(value) << "\n";
  }
}

int cmd_solve(const InstanceArgs& a, bool oracle, std::ostream& out) {
  const DwpInstance inst(PrimePower(a.p, a.e), a.g, a.c);
  const SolutionSet set = solve_all(inst);
  out << "instance: x*" << inst.g().value() << "^x = " << inst.c().value() << " (mod "
      << a.p << "^" << a.e << ")\n";
  out << "m = " << inst.m() << "\n";
  out << "range: 1.." << set.range_bound << "\n";
  out << "solutions: " << join(set.solutions) << "\n";
  out << "residues (x mod m, x mod p^e):";
  for (const auto& [xm, xpe] : set.residue_pairs()) out << " (" << xm << "," << xpe << ")";
  out << "\n";
  if (oracle) {
    const SolutionSet check = brute_force(inst);
    out << "oracle: " << (check.solutions == set.solutions ? "MATCH" : "MISMATCH") << "\n";
    if (check.solutions != set.solutions) return kExitVerdictFailure;
  }
  return kExitOk;
}

int cmd_teichmuller(const InstanceArgs& a, std::ostream& out) {
  const PrimePower pp(a.p, a.e);
  const Residue g(a.g, pp.modulus());
  const TeichDecomposition d = decompose(pp, g);
  const Residue log_u = padic_log(pp, d.one_unit);
  out << "g = " << d.g.value() << " (mod " << pp.modulus() << ")\n";
  out << "omega(g) = " << d.omega.value() << "\n";
  out << "<g> = " << d.one_unit.value() << "\n";
  out << "log <g> = " << log_u.value() << "\n";
  out << "ord omega(g) = " << mult_order(d.omega) << ", ord <g> = " << mult_order(d.one_unit)
      << "\n";
  out << "check omega*<g> = g: " << ((d.omega * d.one_unit) == g ? "yes" : "no") << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string pattern;
  InstanceArgs inst;
  u64 j = 1;
  std::optional<u64> c_prime;
  u64 x = 0;
  u64 n = 0;
};

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
  const PrimePower pp(v.inst.p, v.inst.e);
  std::vector<PatternReport> reports;
  const std::string& name = v.pattern;

  auto instance = [&] { return DwpInstance(pp, v.inst.g, v.inst.c); };
  auto need = [&](bool present, const char* what) {
    if (!present) throw ValidationError(name + " needs " + what);
  };

  if (name == "c_prime_bijection") {
    reports.push_back(check_c_prime_bijection(instance(), v.j, v.c_prime));
  } else if (name == "sums" || name == "sum_mod_p" || name == "sum_mod_m") {
    auto [a, b] = check_sums(instance());
    if (name != "sum_mod_m") reports.push_back(a);
    if (name != "sum_mod_p") reports.push_back(b);
  } else if (name == "conjecture" || name == "conjecture_A" || name == "conjecture_B") {
    auto [a, b] = check_conjecture(instance());
    if (name != "conjecture_B") reports.push_back(a);
    if (name != "conjecture_A") reports.push_back(b);
  } else if (name == "inverse_negation" || name == "inverse_identity" ||
             name == "negation_identity") {
    need(v.x != 0, "-x");
    auto [a, b] = check_inverse_negation(pp, v.inst.g, v.x);
    if (name != "negation_identity") reports.push_back(a);
    if (name != "inverse_identity") reports.push_back(b);
  } else if (name == "special_pair") {
    reports.push_back(special_solution_check(pp, v.inst.g));
  } else if (name == "order_formula") {
    need(v.n != 0, "-n");
    reports.push_back(order_formula_check(pp, v.n));
  } else {
    throw ValidationError("unknown pattern '" + name + "'");
  }

  bool all_ok = true;
  for (const auto& r : reports) {
    print_report(out, r);
    if (r.verdict == Verdict::fails) all_ok = false;
  }
  return all_ok ? kExitOk : kExitVerdictFailure;
}

int cmd_sweep(const std::string& path, std::optional<unsigned> jobs, std::ostream& out) {
  const SweepConfig cfg = load_sweep_config(path);
  const unsigned workers = resolve_parallelism(jobs ? jobs : cfg.parallelism);
  const auto start = std::chrono::steady_clock::now();
  const auto records = run_sweep(cfg, workers);
  write_records_file(cfg.output_path, cfg.output_format, records);
  const auto secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<std::string, std::map<std::string, std::size_t>> table;
  for (const auto& r : records) ++table[r.pattern][r.verdict];
  out << "sweep: " << records.size() << " records written to " << cfg.output_path << " ("
      << to_string(cfg.output_format) << ", " << workers << " workers, " << secs << " s)\n";
  for (const auto& [pattern, counts] : table) {
    out << "  " << pattern << ":";
    for (const auto& [verdict, n] : counts) out << " " << verdict << "=" << n;
    out << "\n";
  }
  return kExitOk;
}

struct AttackArgs {
  u64 p = 0;
  u64 g = 0;
  u64 x_priv = 0;
  i64 msg = 0;
  u64 s2 = 0;
  std::string policy = "extended";
};

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  RangePolicy policy;
  if (a.policy == "extended") {
    policy = RangePolicy::extended;
  } else if (a.policy == "strict") {
    policy = RangePolicy::strict;
  } else {
    throw ValidationError("policy must be strict or extended");
  }
  const ElGamalParams params(a.p, a.g);
  const ElGamalKeypair kp = keygen(params, a.x_priv);
  const ForgeryReduction red = reduce_fixed_s2(params, kp.h, a.msg, a.s2);
  const auto forged = forge_fixed_s2(params, kp.h, a.msg, a.s2);

  out << "public key h = " << kp.h << " (p=" << a.p << ", g=" << params.g << ")\n";
  out << "reduction: s1 * " << red.a << "^s1 = " << red.b << " (mod " << a.p
      << "), s2^-1 = " << red.s2_inv << "\n";
  std::size_t under_policy = 0;
  bool sound = true;
  for (const auto& sig : forged) {
    const bool ext = verify(params, kp.h, a.msg, sig, RangePolicy::extended);
    const bool pol = verify(params, kp.h, a.msg, sig, policy);
    sound = sound && ext;
    under_policy += pol ? 1 : 0;
    out << "  (s1=" << sig.s1 << ", s2=" << sig.s2 << ") " << (pol ? "accepted" : "rejected")
        << "\n";
  }
  out << forged.size() << " forged signatures, " << under_policy << " accepted under "
      << a.policy << " policy\n";
  return sound ? kExitOk : kExitVerdictFailure;
}

int cmd_oracle(const InstanceArgs& a, std::optional<u64> upper, std::ostream& out) {
  const DwpInstance inst(PrimePower(a.p, a.e), a.g, a.c);
  const SolutionSet set = brute_force(inst, upper);
  out << "range: 1.." << set.range_bound << "\n";
  out << "solutions: " << join(set.solutions) << "\n";
  out << "count: " << set.solutions.size() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Lambert congruence x*g^x = c (mod p^e): solver, pattern checks, sweeps"};
  app.require_subcommand(1);

  InstanceArgs solve_args;
  bool with_oracle = false;
  auto* solve = app.add_subcommand("solve", "enumerate the m solutions in 1..p^e*m");
  add_instance_options(solve, solve_args);
  solve->add_flag("--oracle", with_oracle, "cross-check against exhaustive search");

  InstanceArgs count_args;
  auto* count = app.add_subcommand("count", "number of solutions (ord_p g)");
  add_instance_options(count, count_args);

  InstanceArgs teich_args;
  auto* teich = app.add_subcommand("teichmuller", "split g into omega(g) * <g>");
  add_instance_options(teich, teich_args, false);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check one solution pattern");
  verify_cmd->add_option("pattern", verify_args.pattern,
                         "c_prime_bijection | sums | sum_mod_p | sum_mod_m | conjecture | "
                         "conjecture_A | conjecture_B | inverse_negation | inverse_identity | "
                         "negation_identity | special_pair | order_formula")
      ->required();
  verify_cmd->add_option("-p", verify_args.inst.p, "odd prime")->required();
  verify_cmd->add_option("-e", verify_args.inst.e, "exponent (default 1)");
  verify_cmd->add_option("-g", verify_args.inst.g, "base g");
  verify_cmd->add_option("-c", verify_args.inst.c, "target c");
  verify_cmd->add_option("-j", verify_args.j, "solution class for c_prime_bijection");
  verify_cmd->add_option("--c-prime", verify_args.c_prime, "explicit c' for c_prime_bijection");
  verify_cmd->add_option("-x", verify_args.x, "fixed x for inverse/negation identities");
  verify_cmd->add_option("-n", verify_args.n, "exponent n for order_formula");

  std::string sweep_path;
  std::optional<unsigned> sweep_jobs;
  auto* sweep = app.add_subcommand("sweep", "run a grid described by a config file");
  sweep->add_option("config", sweep_path, "key=value config file")->required();
  sweep->add_option("--jobs", sweep_jobs, "worker threads (default $DLAMBERT_JOBS or all cores)");

  AttackArgs attack_args;
  auto* attack = app.add_subcommand("attack", "forge ElGamal signatures with a fixed s2");
  attack->add_option("-p", attack_args.p, "prime")->required();
  attack->add_option("-g", attack_args.g, "generator mod p")->required();
  attack->add_option("-x", attack_args.x_priv, "private key (only used to derive h)")->required();
  attack->add_option("-m", attack_args.msg, "message")->required();
  attack->add_option("--s2", attack_args.s2, "fixed s2, a unit mod p-1")->required();
  attack->add_option("--policy", attack_args.policy, "strict | extended (default extended)");

  InstanceArgs oracle_args;
  std::optional<u64> oracle_upper;
  auto* oracle = app.add_subcommand("oracle", "exhaustive search over 1..upper");
  add_instance_options(oracle, oracle_args);
  oracle->add_option("--upper", oracle_upper, "scan bound (default p^e*m)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(solve_args, with_oracle, out);
    if (*count) {
      const DwpInstance inst(PrimePower(count_args.p, count_args.e), count_args.g, count_args.c);
      out << count_solutions(inst) << "\n";
      return kExitOk;
    }
    if (*teich) return cmd_teichmuller(teich_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*sweep) return cmd_sweep(sweep_path, sweep_jobs, out);
    if (*attack) return cmd_attack(attack_args, out);
    if (*oracle) return cmd_oracle(oracle_args, oracle_upper, out);
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitIo;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dlambert
