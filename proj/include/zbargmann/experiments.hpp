#pragma once

// The batch experiments behind the CLI subcommands. Each command returns its
// CSV text, a human-readable report and an exit code:
//   0 success, 2 input error, 3 invariant failure, 4 published-value mismatch.

#include <cstdint>
#include <functional>
#include <string>

#include "zbargmann/dynamics.hpp"
#include "zbargmann/invariants.hpp"

namespace zbargmann::experiments {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitMismatch = 4;

struct ExperimentConfig {
  std::size_t d = 3;
  std::string z = "pi/4";
  std::string hamiltonian = "H1";  // builtin H1 / H2 or a matrix file
  std::string state = "v0";        // builtin v0 / maximally-mixed-bargmann or a ket/matrix file
  double t_start = 0.0;
  double t_end = 20.0;
  double t_step = 0.01;
  std::uint64_t seed = 1;
  int restarts = 64;
  bool assert_paper_values = false;
  bool allow_mixed = false;  // q-curve: accept mixed states (g from the optimizer)
  bool isolated = false;     // q-curve: V = W = exp(-iHt) instead of the projector
  int random_z = 50;         // check: random points per suite

  void validate() const;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string csv;
  std::string report;
};

// Builtin objects of the worked example (d = 3, full universe C^6).
Ket builtin_v0();
ComplexMatrix builtin_h1();
ComplexMatrix builtin_h2();

HermitianMatrix resolve_hamiltonian(const std::string& name_or_path, std::size_t d);
// Kets of dimension 2d are taken as given, kets of dimension d are mapped to
// their z-Bargmann image; likewise for matrices.
DensityMatrix resolve_state(const std::string& name_or_path, std::size_t d, UnitCirclePoint z);

CommandResult cmd_table1(const ExperimentConfig& cfg);
CommandResult cmd_current_curve(const ExperimentConfig& cfg);
CommandResult cmd_q_curve(const ExperimentConfig& cfg);
CommandResult cmd_q_gt_one(const ExperimentConfig& cfg);
CommandResult cmd_check(const ExperimentConfig& cfg);

// Runs a command, mapping InputError to 2 and InvariantViolation to 3.
CommandResult run_guarded(const std::function<CommandResult()>& command);

}  // namespace zbargmann::experiments
