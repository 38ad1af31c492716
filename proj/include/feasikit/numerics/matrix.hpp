#pragma once

#include "feasikit/numerics/precision.hpp"
#include "feasikit/numerics/scalar.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace feasikit {

/// Dense square matrix, row-major. May be asymmetric.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    [[nodiscard]] Matrix transposed() const;
    [[nodiscard]] bool is_symmetric() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    [[nodiscard]] std::span<const Scalar> data() const { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

Scalar frobenius_norm(const Matrix& a);

/// Symmetric n x n matrix. Symmetry is checked exactly on construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n);
    /// Throws std::invalid_argument when `m` is not exactly symmetric.
    explicit SymMatrix(Matrix m);
    SymMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(std::span<const Scalar> values);
    /// Q diag(values) Q^T, assembled from the upper triangle so the result is exactly symmetric.
    static SymMatrix from_spectrum(const Matrix& basis, std::span<const Scalar> values);

    [[nodiscard]] std::size_t dim() const { return m_.dim(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    /// Sets (i,j) and (j,i) together.
    void set(std::size_t i, std::size_t j, const Scalar& v);

    [[nodiscard]] const Matrix& matrix() const { return m_; }

    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a);
    friend SymMatrix operator*(const Scalar& s, const SymMatrix& a);
    friend SymMatrix operator*(long k, const SymMatrix& a);
    friend SymMatrix operator/(const SymMatrix& a, long k);
    friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

private:
    Matrix m_;
};

/// Frobenius inner product trace(A^T B).
Scalar inner(const SymMatrix& a, const SymMatrix& b);
Scalar norm(const SymMatrix& a);
inline Scalar distance(const SymMatrix& a, const SymMatrix& b) { return norm(a - b); }

/// Eigendecomposition X = Q diag(eigenvalues) Q^T with eigenvalues ascending.
struct Spectrum {
    std::vector<Scalar> eigenvalues;
    Matrix basis;  // columns are eigenvectors

    [[nodiscard]] const Scalar& min_eigenvalue() const { return eigenvalues.front(); }
};

/// Cyclic Jacobi eigensolver.
///
/// Deterministic: rotations sweep the upper triangle row by row, eigenvalues
/// are stably sorted ascending, and every eigenvector is oriented so its
/// largest-magnitude component (first such index on ties) is positive.
/// Throws ConvergenceError when 30 n^2 sweeps do not reduce the off-diagonal
/// mass below eig_tol * ||X||_F.
Spectrum eig_sym(const SymMatrix& x, const PrecisionContext& ctx);

using Vec2 = std::array<Scalar, 2>;
using Mat2 = std::array<Vec2, 2>;  // row-major

/// Solves A sol = b by Cramer's rule.
/// Throws SingularMatrixError when |det A| <= col_tol * ||A||_F^2.
Vec2 solve2x2(const Mat2& a, const Vec2& b, const PrecisionContext& ctx);

}  // namespace feasikit
