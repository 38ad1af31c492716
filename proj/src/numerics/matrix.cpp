#include "feasikit/numerics/matrix.hpp"

#include "feasikit/numerics/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace feasikit {

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("Matrix: rows must form a square array");
        std::size_t j = 0;
        for (const auto& v : row) (*this)(i, j++) = v;
        ++i;
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.dim();
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc;
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c(a.dim());
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
}

Scalar frobenius_norm(const Matrix& a) {
    Scalar acc;
    for (const auto& v : a.data()) acc += v * v;
    return sqrt(acc);
}

SymMatrix::SymMatrix(std::size_t n) : m_(n) {}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw std::invalid_argument("SymMatrix: input is not symmetric");
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) : SymMatrix(Matrix(rows)) {}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::diagonal(std::span<const Scalar> values) {
    SymMatrix d(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) d.m_(i, i) = values[i];
    return d;
}

SymMatrix SymMatrix::from_spectrum(const Matrix& basis, std::span<const Scalar> values) {
    const std::size_t n = basis.dim();
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar acc;
            for (std::size_t k = 0; k < n; ++k) {
                if (values[k].is_zero()) continue;
                acc += basis(i, k) * values[k] * basis(j, k);
            }
            out.set(i, j, acc);
        }
    return out;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    m_(i, j) = v;
    m_(j, i) = v;
}

namespace {

template <typename Op>
SymMatrix elementwise(const SymMatrix& a, const SymMatrix& b, Op op) {
    if (a.dim() != b.dim()) throw std::invalid_argument("SymMatrix: dimension mismatch");
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar v = op(a(i, j), b(i, j));
            out(j, i) = v;
            out(i, j) = std::move(v);
        }
    return SymMatrix(std::move(out));
}

template <typename Op>
SymMatrix map(const SymMatrix& a, Op op) {
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar v = op(a(i, j));
            out(j, i) = v;
            out(i, j) = std::move(v);
        }
    return SymMatrix(std::move(out));
}

}  // namespace

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    return elementwise(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    return elementwise(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}
SymMatrix operator-(const SymMatrix& a) {
    return map(a, [](const Scalar& x) { return -x; });
}
SymMatrix operator*(const Scalar& s, const SymMatrix& a) {
    return map(a, [&](const Scalar& x) { return s * x; });
}
SymMatrix operator*(long k, const SymMatrix& a) {
    return map(a, [&](const Scalar& x) { return k * x; });
}
SymMatrix operator/(const SymMatrix& a, long k) {
    return map(a, [&](const Scalar& x) { return x / k; });
}

Scalar inner(const SymMatrix& a, const SymMatrix& b) {
    const std::size_t n = a.dim();
    Scalar diag;
    Scalar off;
    for (std::size_t i = 0; i < n; ++i) {
        diag += a(i, i) * b(i, i);
        for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * b(i, j);
    }
    return diag + 2 * off;
}

Scalar norm(const SymMatrix& a) { return sqrt(inner(a, a)); }

Spectrum eig_sym(const SymMatrix& x, const PrecisionContext& ctx) {
    const std::size_t n = x.dim();
    if (n == 0) throw std::invalid_argument("eig_sym: empty matrix");

    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = x(i, j).with_bits(ctx.bits());
    Matrix v = Matrix::identity(n);

    const Scalar threshold = ctx.eig_tol() * frobenius_norm(x.matrix());
    auto off_diagonal = [&] {
        Scalar acc = Scalar::zero(ctx.bits());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) acc += a(i, j) * a(i, j);
        return sqrt(2 * acc);
    };

    const std::size_t budget = 30 * n * n;
    std::size_t sweep = 0;
    for (; sweep < budget; ++sweep) {
        if (off_diagonal() <= threshold) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (apq.is_zero()) continue;
                const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
                Scalar t = 1 / (abs(theta) + sqrt(theta * theta + 1));
                if (theta < 0) t = -t;
                const Scalar c = 1 / sqrt(t * t + 1);
                const Scalar s = t * c;

                a(p, p) = a(p, p) - t * apq;
                a(q, q) = a(q, q) + t * apq;
                a(p, q) = Scalar::zero(ctx.bits());
                a(q, p) = Scalar::zero(ctx.bits());
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Scalar akp = a(k, p);
                    const Scalar akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(p, k) = a(k, p);
                    a(k, q) = s * akp + c * akq;
                    a(q, k) = a(k, q);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar vkp = v(k, p);
                    const Scalar vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == budget && off_diagonal() > threshold) {
        throw ConvergenceError("eig_sym: no convergence after " + std::to_string(budget) + " sweeps (n = " +
                               std::to_string(n) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    Spectrum out{std::vector<Scalar>(n), Matrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.eigenvalues[col] = a(src, src);
        std::size_t lead = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (abs(v(k, src)) > abs(v(lead, src))) lead = k;
        const bool flip = v(lead, src) < 0;
        for (std::size_t k = 0; k < n; ++k) out.basis(k, col) = flip ? -v(k, src) : v(k, src);
    }
    return out;
}

Vec2 solve2x2(const Mat2& a, const Vec2& b, const PrecisionContext& ctx) {
    const Scalar det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const Scalar scale = a[0][0] * a[0][0] + a[0][1] * a[0][1] + a[1][0] * a[1][0] + a[1][1] * a[1][1];
    if (abs(det) <= ctx.col_tol() * scale) throw SingularMatrixError("solve2x2: singular system", det);
    return {(b[0] * a[1][1] - a[0][1] * b[1]) / det, (a[0][0] * b[1] - a[1][0] * b[0]) / det};
}

}  // namespace feasikit
