#include "qnc/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnc {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) +
                                    ")");
    }
}

} // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("CMatrix: expected " + std::to_string(dim_ * dim_) +
                                    " entries, got " + std::to_string(data_.size()));
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Ket::Ket(std::size_t dim) : amps_(dim) {}

Ket::Ket(std::vector<Complex> amps) : amps_(std::move(amps)) {}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range("Ket::basis: index " + std::to_string(index) +
                                " out of range for dimension " + std::to_string(dim));
    }
    Ket k(dim);
    k[index] = 1.0;
    return k;
}

double Ket::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

Mat2 Mat2::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Complex Mat2::det() const { return m[0] * m[3] - m[1] * m[2]; }

CMatrix Mat2::to_matrix() const { return CMatrix(2, {m[0], m[1], m[2], m[3]}); }

Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(a.m[i] - b.m[i]));
    }
    return d;
}

bool is_unitary(const Mat2 &m, double tol) { return is_unitary(m.to_matrix(), tol); }

CMatrix mat_mul(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "mat_mul");
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex x = a(r, k);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) { return mat_mul(a, b); }

Ket apply(const CMatrix &m, const Ket &v) {
    require_same_dim(m.dim(), v.dim(), "apply");
    const std::size_t n = m.dim();
    Ket out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

bool is_unitary(const CMatrix &m, double tol) {
    const std::size_t n = m.dim();
    double sq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += std::conj(m(k, r)) * m(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            sq += std::norm(acc);
        }
    }
    return std::sqrt(sq) <= tol;
}

double frobenius_norm(const CMatrix &m) {
    double s = 0.0;
    for (const auto &x : m.entries()) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

double frobenius_dist(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "frobenius_dist");
    double s = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        s += std::norm(a.entries()[i] - b.entries()[i]);
    }
    return std::sqrt(s);
}

double phase_dist(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "phase_dist");
    // tr(b^dagger a) = sum conj(b_ij) a_ij
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        overlap += std::conj(b.entries()[i]) * a.entries()[i];
    }
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
    double s = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        s += std::norm(a.entries()[i] - phase * b.entries()[i]);
    }
    return std::sqrt(s);
}

double phase_dist(const Ket &a, const Ket &b) {
    require_same_dim(a.dim(), b.dim(), "phase_dist");
    const Complex overlap = inner(b, a);
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(s);
}

double l2_dist(const Ket &a, const Ket &b) {
    require_same_dim(a.dim(), b.dim(), "l2_dist");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
}

Complex inner(const Ket &a, const Ket &b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

std::size_t log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument(std::to_string(n) + " is not a power of two");
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

} // namespace qnc
