#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tamelab/tamelab.hpp"

namespace {

using namespace tamelab;

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_string(buf.str());
}

int cmd_analyze(const std::string& path, std::optional<std::uint64_t> n, const std::string& format) {
  Scenario s = load_scenario(path);
  if (n) {
    s.n = *n;
    validate(s);
  }
  const AnalysisReport r = analyze(s);
  if (format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << to_text(r);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format) {
  const SuiteReport r = run_suite(suite, opt);
  if (format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << r.suite << " [" << r.regime << "] instances=" << r.instances << " checked=" << r.checked
              << " hypothesis_met=" << r.hypothesis_met << " violations=" << r.violations << " -> "
              << (r.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c.dump() << '\n';
  }
  return r.pass() ? 0 : 1;
}

int cmd_tables(std::optional<unsigned> nk, const std::vector<std::uint64_t>& rk, std::uint64_t bound) {
  if (nk) {
    std::cout << nk_table(*nk);
  }
  if (!rk.empty()) {
    if (rk.size() != 2) throw Error(ErrorKind::InvalidArgument, "--r takes KMAX NMAX");
    for (unsigned k = 1; k <= rk[0]; ++k) {
      for (std::uint64_t n = 1; n <= rk[1]; ++n) {
        const RValue r = compute_R(k, n, bound);
        std::cout << "R(" << k << ", " << n << ") = ";
        if (r.unbounded) {
          std::cout << "unbounded (every order admissible)\n";
        } else {
          std::cout << r.value.get_str() << "  admissible N <= " << bound << ": " << set_string(r.admissible) << '\n';
        }
      }
    }
    std::cout << "note: " << kRCaveat << '\n';
  }
  return 0;
}

int cmd_oracle(unsigned kmax, std::uint64_t nmax, std::uint64_t order_max) {
  const QuasiUnipotenceReport r = quasithm_oracle(kmax, nmax, order_max);
  std::cout << "quasithm k <= " << kmax << ", n <= " << nmax << ", N <= " << order_max << ": checked " << r.checked
            << ", violations " << r.violations.size() << '\n';
  for (const auto& v : r.violations) {
    std::cout << "  (zeta_" << v.order << " - 1)^" << v.k << " in " << v.n << " Z[zeta_" << v.order << "]\n";
  }
  return r.pass() ? 0 : 1;
}

int cmd_cohomology(const std::string& path, std::size_t k, std::uint64_t n) {
  const Scenario s = load_scenario(path);
  const InertiaGenerator g = validate(s);
  const CohomologyAction act = cohomology_action(g.tau, k, n);
  Json j;
  j["k"] = k;
  j["n"] = n;
  j["action"] = n == 0 ? to_json(act.integral) : to_json(act.modular);
  j["vanishing"] = hk_vanishing(g, k, n);
  try {
    const auto c = highercohcor_classify(g, k, n, s.strictly_henselian);
    j["condition_a"] = c.condition_a;
    j["condition_c"] = c.condition_c;
    j["verdicts"] = Json::array({to_json(c.equivalence)});
    if (c.simplified) j["verdicts"].push_back(to_json(*c.simplified));
  } catch (const Error& e) {
    j["verdicts"] = Json::array({to_json(make_verdict("cohomology-k" + std::to_string(k), false, std::nullopt,
                                                      "not applicable", e.what()))});
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inertia actions on torsion points: criteria, invariants and verification suites"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a scenario file");
  std::string scenario_path;
  std::optional<std::uint64_t> level;
  std::string format = "text";
  analyze_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  analyze_cmd->add_option("--n", level, "Extra torsion level");
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteOptions opt;
  std::string verify_format = "json";
  verify_cmd->add_option("--suite", suite, "Suite id");
  verify_cmd->add_option("--trials", opt.trials, "Random trials");
  verify_cmd->add_option("--seed", opt.seed, "Seed");
  verify_cmd->add_option("--dmax", opt.dmax, "Largest dimension d")->check(CLI::Range(1, 2));
  verify_cmd->add_option("--threads", opt.threads, "Worker threads (does not affect results)");
  verify_cmd->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));
  bool list = false;
  verify_cmd->add_flag("--list", list, "List suite ids");

  auto* tables_cmd = app.add_subcommand("tables", "Print N(k) and R tables");
  std::optional<unsigned> nk;
  std::vector<std::uint64_t> rk;
  std::uint64_t bound = 1000;
  tables_cmd->add_option("--nk", nk, "Print N(1..KMAX)");
  tables_cmd->add_option("--r", rk, "Print R(k, n) for k <= KMAX, n <= NMAX")->expected(2);
  tables_cmd->add_option("--nbound", bound, "Largest order searched for R");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force oracles");
  auto* quasithm_cmd = oracle_cmd->add_subcommand("quasithm", "Sweep (zeta_N - 1)^k in n Z[zeta_N]");
  oracle_cmd->require_subcommand(1);
  unsigned kmax = 4;
  std::uint64_t nmax = 30, order_max = 60;
  quasithm_cmd->add_option("--kmax", kmax, "Largest k");
  quasithm_cmd->add_option("--nmax", nmax, "Largest n");
  quasithm_cmd->add_option("--Nmax", order_max, "Largest root-of-unity order");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Action on the k-th cohomology mod n");
  std::string coh_path;
  std::size_t coh_k = 1;
  std::uint64_t coh_n = 0;
  cohomology_cmd->add_option("scenario", coh_path, "Scenario JSON file")->required();
  cohomology_cmd->add_option("--k", coh_k, "Degree")->required();
  cohomology_cmd->add_option("--n", coh_n, "Level (0 for the integral action)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return cmd_analyze(scenario_path, level, format);
    if (*verify_cmd) {
      if (list) {
        for (const auto& [id, fn] : suite_registry()) std::cout << id << '\n';
        return 0;
      }
      if (suite.empty()) throw Error(ErrorKind::InvalidArgument, "verify needs --suite (see --list)");
      return cmd_verify(suite, opt, verify_format);
    }
    if (*tables_cmd) {
      if (!nk && rk.empty()) throw Error(ErrorKind::InvalidArgument, "tables needs --nk or --r");
      return cmd_tables(nk, rk, bound);
    }
    if (*quasithm_cmd) return cmd_oracle(kmax, nmax, order_max);
    if (*cohomology_cmd) return cmd_cohomology(coh_path, coh_k, coh_n);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
