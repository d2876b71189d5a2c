#pragma once

/**
 * @file decompose.hpp
 * Reduction of unitaries, target states and basis permutations to ordered
 * lists of two-level unitaries.
 *
 * Elimination runs column by column in basis-order sequence. Within the
 * column at order position p, rows are visited from position N-1 down to
 * p+1 and each nonzero entry is nulled against its predecessor in the order.
 * With a Gray order every pair differs in exactly one bit. Rotations G are
 * accumulated until G_m ... G_1 U = I; the stored ops are their inverses in
 * accumulation order so that ops[0] * ops[1] * ... * ops[m-1] = U.
 */

#include <cstddef>
#include <vector>

#include "qnc/encoding.hpp"
#include "qnc/formats.hpp"
#include "qnc/linalg.hpp"

namespace qnc {

/// Entries at or below this magnitude are treated as already zero.
inline constexpr double kZeroTol = 1e-12;

enum class OpKind {
    /// General 2x2 block on span{|e_k>, |e_j>}.
    Rotation,
    /// Diagonal fix: multiplies |e_k> by block(0,0). j records the pivot the
    /// fix is paired with and is otherwise untouched.
    Phase,
};

/**
 * A unitary that differs from the identity only on basis states k and j.
 * The block is laid out over (k, j): block(0,0) is the <e_k|..|e_k> entry,
 * block(0,1) is <e_k|..|e_j>, and so on.
 */
struct TwoLevelOp {
    std::size_t j = 0;
    std::size_t k = 0;
    Mat2 block = Mat2::identity();
    OpKind kind = OpKind::Rotation;
    /// Column being eliminated when the rotation was built (reporting only).
    std::size_t column = 0;

    [[nodiscard]] TwoLevelOp inverse() const;
    /// Embeds into the dim x dim identity.
    [[nodiscard]] CMatrix embed(std::size_t dim) const;
};

struct DecompResult {
    std::vector<TwoLevelOp> ops;
    std::size_t n_qubits = 0;
    /// State preparation only: s = residual_phase * (ops product) |0>.
    Complex residual_phase = 1.0;
};

/// Product ops[0] * ... * ops[m-1] as a dense matrix.
CMatrix reconstruct(const DecompResult &d);

/**
 * Rotation that nulls the j-component of a column using its k-component:
 * (1/r) [[conj(u_k), conj(u_j)], [-u_j, u_k]] with r = sqrt(|u_j|^2 + |u_k|^2),
 * laid out over (k, j). Throws std::invalid_argument if both are ~0.
 */
Mat2 givens_rotation(Complex u_j, Complex u_k);

DecompResult givens_decompose(const CMatrix &u, const BasisOrder &order,
                              double tol = kZeroTol);

DecompResult state_prep_decompose(const Ket &s, const BasisOrder &order,
                                  double tol = kZeroTol);

/// Cycle decomposition into basis-state transpositions (at most N-1).
DecompResult permutation_decompose(const Permutation &p);

} // namespace qnc
