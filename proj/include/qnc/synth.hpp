#pragma once

/**
 * @file synth.hpp
 * Lowering of two-level unitaries to the {U3, CX} alphabet on a fully
 * connected register.
 *
 * A two-level op on basis states k and j becomes
 *   1. a chain of CX gates that makes k and j differ in a single bit t,
 *   2. a single-qubit unitary on qubit t controlled on every other qubit
 *      (zero-valued controls are X-conjugated),
 *   3. the same CX chain again.
 *
 * Multi-controlled gates use the ancilla-free recursion
 *   C^c(U) = C(V)[last->t] . C^{c-1}(X)[rest->last] . C(V^dag)[last->t]
 *            . C^{c-1}(X)[rest->last] . C^{c-1}(V)[rest->t],   V^2 = U,
 * listed in execution order.
 */

#include <cstddef>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/decompose.hpp"
#include "qnc/linalg.hpp"

namespace qnc {

/// u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct Euler {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

Mat2 rz(double angle);
Mat2 ry(double angle);
Mat2 euler_matrix(const Euler &e);

/// Throws std::invalid_argument if u is not unitary within 1e-9.
Euler zyz(const Mat2 &u);

/// U3 gate equal to u up to global phase.
Gate u3_from_matrix(std::size_t q, const Mat2 &u);

/// A square root of u through its eigendecomposition (principal roots of the
/// eigenvalues).
Mat2 sqrt_unitary(const Mat2 &u);

/// Gates emitted by multi_control_expand for c controls.
/// X with one control collapses to a single CX.
std::size_t multi_control_gate_count(std::size_t controls, bool is_x);

/// Controlled-u with all controls conditioned on |1>. Exact including the
/// controlled phase; with zero controls the global phase of u is dropped.
std::vector<Gate> multi_control_expand(const std::vector<std::size_t> &controls,
                                       std::size_t target, const Mat2 &u);

std::vector<Gate> two_level_to_gates(const TwoLevelOp &op, std::size_t n_qubits);

/// Circuit whose unitary equals reconstruct(d) up to global phase; for state
/// preparation it maps |0...0> to the target state up to global phase.
Circuit synth_circuit(const DecompResult &d);

} // namespace qnc
