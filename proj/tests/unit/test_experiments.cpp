#include <string>

#include "doctest.h"
#include "zbargmann/errors.hpp"
#include "zbargmann/experiments.hpp"

using namespace zbargmann;
namespace ex = zbargmann::experiments;

namespace {

std::string data(const char* name) { return std::string(ZB_TEST_DATA_DIR) + "/" + name; }

ex::ExperimentConfig short_run() {
  ex::ExperimentConfig cfg;
  cfg.t_end = 2.0;
  cfg.t_step = 0.05;
  return cfg;
}

}  // namespace

TEST_CASE("builtins and files resolve to the same objects") {
  const UnitCirclePoint z = UnitCirclePoint::from_pi_fraction(1, 4);
  CHECK(max_abs_diff(ex::resolve_hamiltonian(data("h1.txt"), 3).matrix(), ex::builtin_h1()) == 0.0);
  CHECK(max_abs_diff(ex::resolve_state(data("v0.txt"), 3, z).matrix(), ex::resolve_state("v0", 3, z).matrix()) <
        1e-16);
  CHECK_THROWS_WITH_AS(ex::resolve_hamiltonian(data("h_nonhermitian.txt"), 3), doctest::Contains("not Hermitian"),
                       InputError);
  CHECK_THROWS_AS(ex::resolve_hamiltonian("H1", 4), InputError);
  CHECK_THROWS_AS(ex::resolve_hamiltonian(data("h1.txt"), 4), InputError);
  CHECK_THROWS_AS(ex::resolve_state(data("unnormalized.txt"), 3, z), InputError);
  CHECK_THROWS_AS(ex::resolve_state("no-such-state", 3, z), InputError);
  const DensityMatrix small = ex::resolve_state(data("ket3.txt"), 3, z);
  CHECK(small.dim() == 6);
  CHECK(small.is_pure());
  CHECK(is_physical_mat(small.matrix(), z));
}

TEST_CASE("commands are deterministic") {
  const auto cfg = short_run();
  for (auto* cmd : {&ex::cmd_table1, &ex::cmd_current_curve, &ex::cmd_q_curve, &ex::cmd_q_gt_one}) {
    const auto a = cmd(cfg), b = cmd(cfg);
    CHECK(a.exit_code == 0);
    CHECK(a.csv == b.csv);
    CHECK_FALSE(a.csv.empty());
  }
}

TEST_CASE("published-value assertions") {
  auto cfg = short_run();
  cfg.assert_paper_values = true;
  CHECK(ex::cmd_table1(cfg).exit_code == ex::kExitOk);
  CHECK(ex::cmd_q_curve(cfg).exit_code == ex::kExitOk);
  CHECK(ex::cmd_q_gt_one(cfg).exit_code == ex::kExitOk);
  cfg.hamiltonian = "H2";
  const auto r = ex::cmd_q_curve(cfg);
  CHECK(r.exit_code == ex::kExitMismatch);
  CHECK(r.report.find("MISMATCH") != std::string::npos);
}

TEST_CASE("q-curve modes") {
  auto cfg = short_run();
  cfg.state = "maximally-mixed-bargmann";
  const auto refused = ex::run_guarded([&] { return ex::cmd_q_curve(cfg); });
  CHECK(refused.exit_code == ex::kExitInput);
  cfg.allow_mixed = true;
  cfg.restarts = 8;
  const auto mixed = ex::cmd_q_curve(cfg);
  CHECK(mixed.exit_code == 0);
  CHECK(mixed.report.find("upper bounds") != std::string::npos);

  cfg = short_run();
  cfg.isolated = true;
  const auto iso = ex::cmd_q_curve(cfg);
  CHECK(iso.exit_code == 0);
  CHECK(iso.report.find("isolated") != std::string::npos);
}

TEST_CASE("q-gt-one at the exceptional point") {
  auto cfg = short_run();
  cfg.z = "pi/2";
  cfg.assert_paper_values = true;
  const auto r = ex::cmd_q_gt_one(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.find("expected exception") != std::string::npos);
}

TEST_CASE("check command") {
  auto cfg = short_run();
  cfg.random_z = 5;
  CHECK(ex::cmd_check(cfg).exit_code == 0);
  cfg.z = "pi/2";
  const auto at_i = ex::cmd_check(cfg);
  CHECK(at_i.exit_code == 0);
  CHECK(at_i.report.find("expected exception") != std::string::npos);
  cfg.hamiltonian = data("h_nonhermitian.txt");
  const auto bad = ex::cmd_check(cfg);
  CHECK(bad.exit_code == ex::kExitInvariant);
  CHECK(bad.report.find("Hermiticity") != std::string::npos);
}

TEST_CASE("errors map to exit codes") {
  auto cfg = short_run();
  cfg.t_step = 0.0;
  CHECK(ex::run_guarded([&] { return ex::cmd_current_curve(cfg); }).exit_code == ex::kExitInput);
  cfg = short_run();
  cfg.z = "bogus";
  CHECK(ex::run_guarded([&] { return ex::cmd_q_gt_one(cfg); }).exit_code == ex::kExitInput);
  CHECK(ex::run_guarded([]() -> ex::CommandResult { throw InvariantViolation("x", 1.0); }).exit_code ==
        ex::kExitInvariant);
}
