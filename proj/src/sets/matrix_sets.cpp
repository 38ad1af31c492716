#include "feasikit/sets/matrix_sets.hpp"

#include <stdexcept>
#include <string>

namespace feasikit {

namespace {

// X - sum_k shift_k q_k q_k^T over the listed eigenpairs. Equal to
// Q diag(lambda - shift) Q^T but leaves untouched directions exact.
SymMatrix subtract_rank_ones(const SymMatrix& x, const Spectrum& spec, const std::vector<std::size_t>& which) {
    const std::size_t n = x.dim();
    SymMatrix out = x;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar acc = x(i, j);
            for (std::size_t k : which) acc -= spec.eigenvalues[k] * spec.basis(i, k) * spec.basis(j, k);
            out.set(i, j, acc);
        }
    return out;
}

SymMatrix symmetric_average(const Matrix& x) {
    const std::size_t n = x.dim();
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, i, x(i, i));
        for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, (x(i, j) + x(j, i)) / 2);
    }
    return out;
}

}  // namespace

SymMatrix project_psd(const SymMatrix& x, const PrecisionContext& ctx) {
    const Spectrum spec = eig_sym(x, ctx);
    std::vector<std::size_t> negative;
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k)
        if (spec.eigenvalues[k] < 0) negative.push_back(k);
    if (negative.empty()) return x;
    return subtract_rank_ones(x, spec, negative);
}

SymMatrix project_psd_boundary(const SymMatrix& x, const PrecisionContext& ctx) {
    const Spectrum spec = eig_sym(x, ctx);
    if (spec.min_eigenvalue() <= 0) {
        std::vector<std::size_t> negative;
        for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k)
            if (spec.eigenvalues[k] < 0) negative.push_back(k);
        if (negative.empty()) return x;
        return subtract_rank_ones(x, spec, negative);
    }
    // Ascending order: index 0 is the first attaining lambda_min.
    return subtract_rank_ones(x, spec, {0});
}

SymMatrix project_diag_ones(const Matrix& x) {
    SymMatrix out = symmetric_average(x);
    for (std::size_t i = 0; i < x.dim(); ++i) out.set(i, i, Scalar(1));
    return out;
}

SymMatrix project_diag_ones(const SymMatrix& x) { return project_diag_ones(x.matrix()); }

SymMatrix project_entry11(const Matrix& x) {
    SymMatrix out = symmetric_average(x);
    if (x.dim() > 0) out.set(0, 0, Scalar(1));
    return out;
}

SymMatrix project_entry11(const SymMatrix& x) { return project_entry11(x.matrix()); }

MatrixSet psd_set(const PrecisionContext& ctx) {
    return MatrixSet("psd", [ctx](const SymMatrix& x) { return project_psd(x, ctx); });
}

MatrixSet psd_boundary_set(const PrecisionContext& ctx) {
    return MatrixSet("psd-boundary", [ctx](const SymMatrix& x) { return project_psd_boundary(x, ctx); });
}

MatrixSet diag_ones_set() {
    return MatrixSet("diag-ones", [](const SymMatrix& x) { return project_diag_ones(x); });
}

MatrixSet entry11_set() {
    return MatrixSet("entry11", [](const SymMatrix& x) { return project_entry11(x); });
}

MatrixSet matrix_set_from_id(std::string_view id, const PrecisionContext& ctx) {
    if (id == "psd") return psd_set(ctx);
    if (id == "psd-boundary") return psd_boundary_set(ctx);
    if (id == "diag-ones") return diag_ones_set();
    if (id == "entry11") return entry11_set();
    throw std::invalid_argument("unknown matrix set id '" + std::string(id) + "'");
}

}  // namespace feasikit
