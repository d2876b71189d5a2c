#pragma once

/**
 * @file pipeline.hpp
 * End-to-end driver: decompose -> synthesize -> route -> coalesce -> time.
 */

#include <cstddef>
#include <optional>
#include <variant>

#include "qnc/circuit.hpp"
#include "qnc/encoding.hpp"
#include "qnc/formats.hpp"
#include "qnc/layout.hpp"
#include "qnc/linalg.hpp"
#include "qnc/optimize.hpp"
#include "qnc/timing.hpp"

namespace qnc {

/// Unitary, target state, basis permutation, or an existing circuit (which
/// skips decomposition).
using CompileInput = std::variant<CMatrix, Ket, Permutation, Circuit>;

struct CompileOptions {
    Scheme scheme = Scheme::Gray;
    /// No topology means full connectivity: routing is skipped.
    std::optional<Topology> topology;
    /// Defaults to the identity placement.
    std::optional<LayoutMap> mapping;
    bool optimize = true;
    TimingModel timing;
};

struct CompileResult {
    std::size_t n_logical = 0;
    /// Synthesized (or parsed) circuit on logical qubits.
    Circuit logical;
    /// Output circuit on physical qubits (logical when unrouted).
    Circuit final_circuit;
    LayoutMap layout;
    GateCounts before;
    GateCounts after;
    double estimated_ns = 0.0;
    CoherenceVerdict verdict;
};

CompileResult compile(const CompileInput &input, const CompileOptions &opts);

/// Operator the final circuit realizes on the mapped qubits, with unused
/// physical qubits fixed at |0>. Requires n_logical <= kMaxUnitaryQubits.
CMatrix logical_unitary(const CompileResult &r);

/// Final state from |0...0> restricted to the mapped qubits.
Ket logical_state(const CompileResult &r);

struct Verification {
    /// phase-insensitive Frobenius (operators) or l2 (states) error
    double reconstruction_error = 0.0;
    /// |<ideal|actual>|^2 starting from |0...0>
    double success_rate = 0.0;
};

Verification verify(const CompileInput &input, const CompileResult &r);

/// Appends measure of logical qubit i (at its physical location) into c[i].
void append_measure_all(Circuit &c, const LayoutMap &layout);

} // namespace qnc
