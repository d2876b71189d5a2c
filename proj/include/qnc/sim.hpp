#pragma once

/**
 * @file sim.hpp
 * Exact statevector simulation. Gates are applied in list order by updating
 * amplitude pairs that differ in the target bit; qubit q owns bit (n-1-q) of
 * the basis index.
 */

#include <cstddef>

#include "qnc/circuit.hpp"
#include "qnc/linalg.hpp"

namespace qnc {

inline constexpr std::size_t kMaxStatevectorQubits = 20;
inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// In-place gate application; measurements and barriers are no-ops.
void apply_gate(const Gate &g, std::size_t n_qubits, Ket &state);

/// Pre-measurement state after running c on `start`.
Ket simulate(const Circuit &c, const Ket &start);

/// Column i is simulate(c, |i>). Requires n_qubits <= kMaxUnitaryQubits.
CMatrix circuit_unitary(const Circuit &c);

/// |<target|final>|^2
double success_rate(const Ket &final_state, const Ket &target);
double success_rate(const Ket &final_state, std::size_t basis_index);

} // namespace qnc
