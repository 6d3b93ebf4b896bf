// Command-line runner for the z-Bargmann experiments.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zbargmann/experiments.hpp"
#include "zbargmann/io.hpp"

namespace ex = zbargmann::experiments;

namespace {

void add_common(CLI::App* app, ex::ExperimentConfig& cfg, std::string& out) {
  app->add_option("--d", cfg.d, "dimension d of the open system (full universe is 2d)")->capture_default_str();
  app->add_option("--z", cfg.z, "angle of z: pi/4, 2pi/3, -pi/2 or decimal radians")->capture_default_str();
  app->add_option("--hamiltonian", cfg.hamiltonian, "H1, H2 or a matrix file (2d x 2d)")->capture_default_str();
  app->add_option("--state", cfg.state,
                  "v0, maximally-mixed-bargmann, or a ket/matrix file (dimension d: mapped to its z-Bargmann image; "
                  "2d: used as is)")
      ->capture_default_str();
  app->add_option("--t-start", cfg.t_start, "first time")->capture_default_str();
  app->add_option("--t-end", cfg.t_end, "last time (inclusive)")->capture_default_str();
  app->add_option("--t-step", cfg.t_step, "time step")->capture_default_str();
  app->add_option("--seed", cfg.seed, "seed for the optimizer and random suites")->capture_default_str();
  app->add_option("--restarts", cfg.restarts, "optimizer restarts")->capture_default_str();
  app->add_option("--out", out, "write CSV here instead of stdout (the report then goes to stdout)");
  app->add_flag("--assert-paper-values", cfg.assert_paper_values,
                "compare against the published values; exit 4 on mismatch");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "z-Bargmann embedding of a d-dimensional open system into a 2d-dimensional isolated one.\n"
      "Exit codes: 0 success, 2 input error, 3 invariant failure, 4 published-value mismatch."};
  app.require_subcommand(1);

  ex::ExperimentConfig cfg;
  std::string out;

  auto* table1 = app.add_subcommand("table1", "Taylor coefficients of J(t) for H1, H2 at z = exp(i pi/4, pi/5, pi/6).\n"
                                              "CSV: hamiltonian,z_angle,c0,c1,c2 (z_angle in radians)");
  auto* curve = app.add_subcommand("current-curve", "Probability current J(t) and occupancy Tr[Pi(z) rho(t)].\n"
                                                    "CSV: t,J,occupancy");
  auto* qcurve = app.add_subcommand("q-curve", "Q(t) = 2|Tr[Pi(z) rho(t)]| / g[rho(t)] and the t = 0.05/0.1/0.15 checkpoints.\n"
                                               "CSV: t,Q,Q_times_g,g");
  auto* qgt = app.add_subcommand("q-gt-one", "Q = 2d/g_lower[Pi(z)] with certified bounds.\n"
                                             "CSV: d,z_angle,g_lower,g_prime,one_norm,Q");
  auto* check = app.add_subcommand("check", "Run the invariant suites at --d, --z, --seed; exit 0 iff all pass.\n"
                                            "CSV: suite,passed,checks,worst_residual");
  for (auto* sub : {table1, curve, qcurve, qgt, check}) add_common(sub, cfg, out);
  qcurve->add_flag("--allow-mixed", cfg.allow_mixed, "accept a mixed state (g from the optimizer; Q is an upper bound)");
  qcurve->add_flag("--isolated", cfg.isolated, "isolated mode: V = W = exp(-iHt), Q constant in t");
  check->add_option("--random-z", cfg.random_z, "random z points per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ex::kExitInput;
  }

  ex::CommandResult (*command)(const ex::ExperimentConfig&) = nullptr;
  if (*table1) command = ex::cmd_table1;
  else if (*curve) command = ex::cmd_current_curve;
  else if (*qcurve) command = ex::cmd_q_curve;
  else if (*qgt) command = ex::cmd_q_gt_one;
  else command = ex::cmd_check;

  ex::CommandResult result = ex::run_guarded([&] { return command(cfg); });

  if (!out.empty() && !result.csv.empty()) {
    try {
      zbargmann::io::write_text(out, result.csv);
    } catch (const std::exception& e) {
      std::cerr << "input error: " << e.what() << '\n';
      return ex::kExitInput;
    }
    std::cout << result.report << std::flush;
  } else {
    std::cout << result.csv << std::flush;
    std::cerr << result.report << std::flush;
  }
  return result.exit_code;
}
