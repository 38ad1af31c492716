#pragma once

#include "feasikit/numerics/errors.hpp"
#include "feasikit/numerics/precision.hpp"

#include <cstddef>
#include <span>

namespace feasikit {

/// Fewer usable error entries than an estimator needs.
class InsufficientDataError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Fit of log e_{n+1} = q log e_n + log c.
struct OrderEstimate {
    Scalar q;
    Scalar c;
    /// Entries e_first .. e_last (inclusive) feed the fitted pairs.
    std::size_t first = 0;
    std::size_t last = 0;
    /// Root-mean-square residual of the fit in natural-log units.
    Scalar residual;
};

/// Usable entries are positive and above 10^-(digits - 10). The fit runs
/// over the last max(4, ceil(k/2)) pairs of the final run of k consecutive
/// usable pairs. Throws InsufficientDataError with fewer than 4 usable
/// entries or a degenerate window.
OrderEstimate estimate_order(std::span<const Scalar> errors, const PrecisionContext& ctx);

/// Geometric mean of e_{n+1} / e_n over the same tail window. Needs 3 usable entries.
Scalar estimate_linear_rate(std::span<const Scalar> errors, const PrecisionContext& ctx);

}  // namespace feasikit
