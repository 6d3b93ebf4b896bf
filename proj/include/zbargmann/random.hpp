#pragma once

// Random test objects drawn from a CounterRng: used by the invariant suites
// of the `check` command and by the test binaries.

#include "zbargmann/hilbert.hpp"
#include "zbargmann/rng.hpp"

namespace zbargmann::random {

double normal(CounterRng& rng);
cplx complex_normal(CounterRng& rng);
UnitCirclePoint unit_circle(CounterRng& rng);
cplx unit_phase(CounterRng& rng);

ComplexMatrix complex_matrix(std::size_t n, CounterRng& rng);
ComplexMatrix hermitian(std::size_t n, CounterRng& rng);
// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix unitary(std::size_t n, CounterRng& rng);
Ket unit_ket(std::size_t n, CounterRng& rng);
Ket complex_ket(std::size_t n, CounterRng& rng);
// Full-rank density matrix: G G^dagger / Tr.
ComplexMatrix density(std::size_t n, CounterRng& rng);
// Matrix with max row norm exactly 1 (a boundary point of the rescaling set).
ComplexMatrix rescaling(std::size_t n, CounterRng& rng);

}  // namespace zbargmann::random
