#include "qnc/decompose.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnc {

namespace {

/// Tolerance for the post-decomposition self-check.
constexpr double kReconstructionTol = 1e-8;

void check_order(const BasisOrder &order, std::size_t dim) {
    if (order.size() != dim) {
        throw std::invalid_argument("basis order has " + std::to_string(order.size()) +
                                    " codes, operator dimension is " + std::to_string(dim));
    }
    if (order.codes.front() != 0) {
        throw std::invalid_argument("basis order must start at |0>");
    }
}

/// rows := op * rows, touching only rows k and j.
template <typename RowAccess>
void left_apply(const TwoLevelOp &op, std::size_t width, RowAccess &&at) {
    const Mat2 &b = op.block;
    if (op.kind == OpKind::Phase) {
        for (std::size_t c = 0; c < width; ++c) {
            at(op.k, c) *= b(0, 0);
        }
        return;
    }
    for (std::size_t c = 0; c < width; ++c) {
        const Complex rk = at(op.k, c);
        const Complex rj = at(op.j, c);
        at(op.k, c) = b(0, 0) * rk + b(0, 1) * rj;
        at(op.j, c) = b(1, 0) * rk + b(1, 1) * rj;
    }
}

void left_apply(const TwoLevelOp &op, CMatrix &m) {
    left_apply(op, m.dim(), [&m](std::size_t r, std::size_t c) -> Complex & { return m(r, c); });
}

void left_apply(const TwoLevelOp &op, Ket &v) {
    left_apply(op, 1, [&v](std::size_t r, std::size_t) -> Complex & { return v[r]; });
}

} // namespace

TwoLevelOp TwoLevelOp::inverse() const {
    TwoLevelOp inv = *this;
    if (kind == OpKind::Phase) {
        inv.block = Mat2::diag(std::conj(block(0, 0)), 1.0);
    } else {
        inv.block = block.adjoint();
    }
    return inv;
}

CMatrix TwoLevelOp::embed(std::size_t dim) const {
    if (j >= dim || k >= dim) {
        throw std::out_of_range("TwoLevelOp::embed: index out of range");
    }
    CMatrix m = CMatrix::identity(dim);
    m(k, k) = block(0, 0);
    if (kind == OpKind::Rotation) {
        m(k, j) = block(0, 1);
        m(j, k) = block(1, 0);
        m(j, j) = block(1, 1);
    }
    return m;
}

CMatrix reconstruct(const DecompResult &d) {
    CMatrix p = CMatrix::identity(std::size_t{1} << d.n_qubits);
    for (auto it = d.ops.rbegin(); it != d.ops.rend(); ++it) {
        left_apply(*it, p);
    }
    return p;
}

Mat2 givens_rotation(Complex u_j, Complex u_k) {
    const double r = std::sqrt(std::norm(u_j) + std::norm(u_k));
    if (r <= kZeroTol) {
        throw std::invalid_argument("givens_rotation: both entries are zero");
    }
    return {{std::conj(u_k) / r, std::conj(u_j) / r, -u_j / r, u_k / r}};
}

DecompResult givens_decompose(const CMatrix &u, const BasisOrder &order, double tol) {
    const std::size_t dim = u.dim();
    if (dim < 2 || !is_power_of_two(dim)) {
        throw std::invalid_argument("givens_decompose: dimension must be a power of two >= 2");
    }
    if (!is_unitary(u, kInputTol)) {
        throw std::invalid_argument("givens_decompose: input is not unitary");
    }
    check_order(order, dim);

    CMatrix r = u;
    std::vector<TwoLevelOp> forward;
    const auto &codes = order.codes;
    for (std::size_t p = 0; p < dim; ++p) {
        const std::size_t col = codes[p];
        for (std::size_t q = dim - 1; q > p; --q) {
            const std::size_t j = codes[q];
            const std::size_t k = codes[q - 1];
            const Complex u_j = r(j, col);
            const Complex u_k = r(k, col);
            bool needed = std::abs(u_j) > tol;
            // Nothing left to null against the pivot but its entry carries a
            // phase: rotate anyway so the phase moves down the order and only
            // the last diagonal entry can end up non-unity.
            if (!needed && q == p + 1 && std::abs(u_k) > tol && std::abs(u_k - 1.0) > tol) {
                needed = true;
            }
            if (!needed) {
                continue;
            }
            TwoLevelOp g{j, k, givens_rotation(u_j, u_k), OpKind::Rotation, col};
            left_apply(g, r);
            r(j, col) = 0.0;
            forward.push_back(g);
        }
    }

    const std::size_t last = codes[dim - 1];
    const Complex d = r(last, last);
    if (std::abs(d - 1.0) > tol) {
        TwoLevelOp fix{codes[0], last, Mat2::diag(std::conj(d) / std::abs(d), 1.0),
                       OpKind::Phase, last};
        left_apply(fix, r);
        forward.push_back(fix);
    }

    DecompResult result;
    result.n_qubits = log2_exact(dim);
    result.ops.reserve(forward.size());
    for (const auto &g : forward) {
        result.ops.push_back(g.inverse());
    }
    if (frobenius_dist(reconstruct(result), u) > kReconstructionTol) {
        throw std::logic_error("givens_decompose: reconstruction check failed");
    }
    return result;
}

DecompResult state_prep_decompose(const Ket &s, const BasisOrder &order, double tol) {
    const std::size_t dim = s.dim();
    if (dim < 2 || !is_power_of_two(dim)) {
        throw std::invalid_argument("state_prep_decompose: length must be a power of two >= 2");
    }
    if (std::abs(s.norm() - 1.0) > kInputTol) {
        throw std::invalid_argument("state_prep_decompose: state is not normalized");
    }
    check_order(order, dim);

    Ket r = s;
    std::vector<TwoLevelOp> forward;
    const auto &codes = order.codes;
    for (std::size_t q = dim - 1; q > 0; --q) {
        const std::size_t j = codes[q];
        const std::size_t k = codes[q - 1];
        if (std::abs(r[j]) <= tol) {
            continue;
        }
        TwoLevelOp g{j, k, givens_rotation(r[j], r[k]), OpKind::Rotation, 0};
        left_apply(g, r);
        r[j] = 0.0;
        forward.push_back(g);
    }

    DecompResult result;
    result.n_qubits = log2_exact(dim);
    result.residual_phase = r[codes[0]] / std::abs(r[codes[0]]);
    for (const auto &g : forward) {
        result.ops.push_back(g.inverse());
    }

    Ket check = Ket::basis(dim, 0);
    for (auto it = result.ops.rbegin(); it != result.ops.rend(); ++it) {
        left_apply(*it, check);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        check[i] *= result.residual_phase;
    }
    if (l2_dist(check, s) > kReconstructionTol) {
        throw std::logic_error("state_prep_decompose: reconstruction check failed");
    }
    return result;
}

DecompResult permutation_decompose(const Permutation &p) {
    const std::size_t n = p.size();
    if (n < 2 || !is_power_of_two(n)) {
        throw std::invalid_argument("permutation_decompose: size must be a power of two >= 2");
    }
    DecompResult result;
    result.n_qubits = log2_exact(n);
    std::vector<bool> visited(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) {
            continue;
        }
        std::vector<std::size_t> cycle;
        for (std::size_t v = start; !visited[v]; v = p.images.at(v)) {
            visited[v] = true;
            cycle.push_back(v);
        }
        if (p.images[cycle.back()] != start) {
            throw std::invalid_argument("permutation_decompose: not a bijection");
        }
        // (c0 c1 ... c_{m-1}) = T(c0,c_{m-1}) ... T(c0,c1) as a matrix product.
        for (std::size_t t = cycle.size(); t-- > 1;) {
            result.ops.push_back(
                TwoLevelOp{cycle[t], cycle[0], Mat2::pauli_x(), OpKind::Rotation, cycle[0]});
        }
    }
    return result;
}

} // namespace qnc
