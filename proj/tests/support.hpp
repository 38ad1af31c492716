#pragma once

#include "feasikit/numerics/matrix.hpp"
#include "feasikit/numerics/point2.hpp"

#include <random>

namespace testing_support {

using feasikit::PrecisionContext;
using feasikit::Scalar;

// Uniform on [lo, hi) at working precision, from raw engine bits.
inline Scalar uniform(std::mt19937_64& rng, double lo, double hi, const PrecisionContext& ctx) {
    const Scalar u = Scalar(static_cast<unsigned long>(rng() >> 11)).with_bits(ctx.bits()) / (1L << 53);
    return Scalar(lo).with_bits(ctx.bits()) + (Scalar(hi) - Scalar(lo)) * u;
}

inline feasikit::Point2 random_point(std::mt19937_64& rng, double half_width, const PrecisionContext& ctx) {
    return {uniform(rng, -half_width, half_width, ctx), uniform(rng, -half_width, half_width, ctx)};
}

inline feasikit::SymMatrix random_sym(std::mt19937_64& rng, std::size_t n, double half_width,
                                      const PrecisionContext& ctx) {
    feasikit::SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m.set(i, j, uniform(rng, -half_width, half_width, ctx));
    }
    return m;
}

inline feasikit::Matrix random_matrix(std::mt19937_64& rng, std::size_t n, double half_width,
                                      const PrecisionContext& ctx) {
    feasikit::Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -half_width, half_width, ctx);
    }
    return m;
}

inline Scalar orthogonality_residual(const feasikit::Matrix& q) {
    return frobenius_norm(q.transposed() * q - feasikit::Matrix::identity(q.dim()));
}

inline Scalar reconstruction_residual(const feasikit::SymMatrix& x, const feasikit::Spectrum& s) {
    return distance(feasikit::SymMatrix::from_spectrum(s.basis, s.eigenvalues), x);
}

inline bool close(const Scalar& a, const Scalar& b, const Scalar& tol) { return abs(a - b) <= tol; }

}  // namespace testing_support
