#pragma once

#include "feasikit/numerics/matrix.hpp"
#include "feasikit/numerics/precision.hpp"
#include "feasikit/sets/feasibility_set.hpp"

#include <string_view>

namespace feasikit {

using MatrixSet = FeasibilitySet<SymMatrix>;

/// Q diag(max(lambda_i, 0)) Q^T.
SymMatrix project_psd(const SymMatrix& x, const PrecisionContext& ctx);

/// Nearest matrix with lambda_min == 0. Falls back to project_psd when
/// lambda_min <= 0; otherwise zeroes the first index attaining lambda_min
/// in ascending order.
SymMatrix project_psd_boundary(const SymMatrix& x, const PrecisionContext& ctx);

/// Unit diagonal, off-diagonals replaced by (X_ij + X_ji) / 2.
SymMatrix project_diag_ones(const Matrix& x);
SymMatrix project_diag_ones(const SymMatrix& x);

/// X_11 = 1, other diagonal entries kept, off-diagonals symmetric-averaged.
SymMatrix project_entry11(const Matrix& x);
SymMatrix project_entry11(const SymMatrix& x);

MatrixSet psd_set(const PrecisionContext& ctx);
MatrixSet psd_boundary_set(const PrecisionContext& ctx);
MatrixSet diag_ones_set();
MatrixSet entry11_set();

/// Resolves `psd`, `psd-boundary`, `diag-ones`, `entry11`.
MatrixSet matrix_set_from_id(std::string_view id, const PrecisionContext& ctx);

}  // namespace feasikit
