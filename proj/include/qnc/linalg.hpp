#pragma once

/**
 * @file linalg.hpp
 * Dense complex vectors and matrices used throughout the compiler.
 *
 * Matrices are stored row-major. Basis index convention: qubit 0 is the most
 * significant bit of a basis index.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qnc {

using Complex = std::complex<double>;

/// Default absolute tolerance for floating comparisons.
inline constexpr double kDefaultTol = 1e-9;

class CMatrix {
  public:
    CMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::vector<Complex> entries);

    static CMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::span<const Complex> entries() const { return data_; }
    [[nodiscard]] std::span<Complex> entries() { return data_; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] CMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;

    bool operator==(const CMatrix &) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

class Ket {
  public:
    Ket() = default;
    explicit Ket(std::size_t dim);
    explicit Ket(std::vector<Complex> amps);

    /// Computational basis vector |index>.
    static Ket basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amps() const { return amps_; }
    [[nodiscard]] std::span<Complex> amps() { return amps_; }

    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;

  private:
    std::vector<Complex> amps_;
};

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Mat2 {
    std::array<Complex, 4> m{};

    Complex &operator()(std::size_t r, std::size_t c) { return m[2 * r + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return m[2 * r + c];
    }

    static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
    static Mat2 pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }
    static Mat2 diag(Complex a, Complex b) { return {{a, 0.0, 0.0, b}}; }

    [[nodiscard]] Mat2 adjoint() const;
    [[nodiscard]] Complex det() const;
    [[nodiscard]] CMatrix to_matrix() const;

    bool operator==(const Mat2 &) const = default;
};

Mat2 operator*(const Mat2 &a, const Mat2 &b);

/// Largest absolute entry-wise difference.
double max_abs_diff(const Mat2 &a, const Mat2 &b);
bool is_unitary(const Mat2 &m, double tol = kDefaultTol);

CMatrix mat_mul(const CMatrix &a, const CMatrix &b);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

/// Matrix-vector product.
Ket apply(const CMatrix &m, const Ket &v);

/// True iff ||m^dagger m - I||_F <= tol.
bool is_unitary(const CMatrix &m, double tol = kDefaultTol);

double frobenius_norm(const CMatrix &m);
double frobenius_dist(const CMatrix &a, const CMatrix &b);

/// min over phi of ||a - e^{i phi} b||_F, in closed form.
double phase_dist(const CMatrix &a, const CMatrix &b);

/// min over phi of ||a - e^{i phi} b||_2 for vectors.
double phase_dist(const Ket &a, const Ket &b);

double l2_dist(const Ket &a, const Ket &b);

/// <a|b>
Complex inner(const Ket &a, const Ket &b);

/// True iff n is a positive power of two (1 included).
constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// log2 of a power of two.
std::size_t log2_exact(std::size_t n);

} // namespace qnc
