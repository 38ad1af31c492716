#pragma once

#include "feasikit/numerics/matrix.hpp"
#include "feasikit/numerics/point2.hpp"
#include "feasikit/sets/feasibility_set.hpp"
#include "feasikit/solvers/operators.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feasikit {

/// A named feasibility pair: operator order, affine set, and how the error reference is obtained.
template <typename P>
struct Problem {
    std::string id;
    DrOperator<P> op;
    FeasibilitySet<P> affine;
    /// Known solution. When absent the reference is estimated per run.
    std::optional<P> reference;
    /// Radius of the sampling disk around `reference` (plane problems only).
    Scalar sample_radius;
};

using PlaneProblem = Problem<Point2>;
using MatrixProblem = Problem<SymMatrix>;

/// "circle-line", "graph:<curve-id>", "psd-s1", "psdb-s1", "psdb-s11".
std::vector<std::string> catalog_ids();

bool is_matrix_problem(std::string_view id);

/// Throws std::invalid_argument for ids that are not plane problems.
PlaneProblem plane_problem(std::string_view id, const PrecisionContext& ctx);

/// Throws std::invalid_argument for ids that are not matrix problems or dim < 2.
MatrixProblem matrix_problem(std::string_view id, std::size_t dim, const PrecisionContext& ctx);

}  // namespace feasikit
