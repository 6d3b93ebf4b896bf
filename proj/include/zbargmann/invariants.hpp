#pragma once

// Randomized invariant suites for each module. A suite never throws for a
// failed identity; it records the residual and carries on, so one run lists
// every failure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zbargmann/dynamics.hpp"

namespace zbargmann::invariants {

struct SuiteResult {
  std::string name;
  bool passed = true;
  double worst_residual = 0.0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;
};

struct SuiteConfig {
  std::size_t d = 3;
  std::vector<UnitCirclePoint> zs;  // points to test; random ones are appended
  int random_z = 50;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  AscentOptions ascent{};
};

SuiteResult hilbert_suite(const SuiteConfig& cfg);
SuiteResult grothendieck_suite(const SuiteConfig& cfg);
// Algebraic identities of M(z), Pi(z), Pi(z1,z2), the Bargmann transforms
// and projected unitaries. Row-structure checks only for d >= 3.
SuiteResult bargmann_suite(const SuiteConfig& cfg);
// Trajectory checks for H on C^{2d}; a random Hermitian H is used if none is given.
SuiteResult dynamics_suite(const SuiteConfig& cfg, const std::optional<HermitianMatrix>& h = std::nullopt);
// g_lower[Pi(z)] < 2d at each configured z. An attained 2d is reported as an
// expected exception, never as a failure.
SuiteResult strictness_suite(const SuiteConfig& cfg);

// Hermiticity of a user-supplied Hamiltonian, as a suite so `check` can list it.
SuiteResult hermiticity_suite(const ComplexMatrix& h, double tolerance = kHermiticityTolerance);

std::string format_result(const SuiteResult& r);

}  // namespace zbargmann::invariants
