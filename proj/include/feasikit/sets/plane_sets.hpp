#pragma once

#include "feasikit/numerics/point2.hpp"
#include "feasikit/numerics/precision.hpp"
#include "feasikit/sets/curve.hpp"
#include "feasikit/sets/feasibility_set.hpp"

#include <string_view>

namespace feasikit {

using PlaneSet = FeasibilitySet<Point2>;

Point2 project_horizontal_line(const Point2& p, const Scalar& height);

/// Radial projection; the origin maps to (1, 0).
Point2 project_circle(const Point2& p);

/// Nearest point on gra f.
///
/// Newton's method on the stationarity condition
///   g(t) = (t - p.x) + (f(t) - p.z) f'(t) = 0
/// from 33 equispaced starts on [p.x - 2D, p.x + 2D], D = 1 + |p.z|. Among the
/// converged roots the one with least squared distance wins, ties going to
/// the smaller t. Throws ConvergenceError if no start converges.
Point2 project_graph(const Point2& p, const AnalyticCurve& curve, const PrecisionContext& ctx);

PlaneSet xaxis_set();
PlaneSet horizontal_line_set(const Scalar& height);
PlaneSet unit_circle_set();
PlaneSet graph_set(const AnalyticCurve& curve, const PrecisionContext& ctx);

/// Resolves `xaxis`, `hline:<h>`, `circle`, `graph:<curve-id>`.
PlaneSet plane_set_from_id(std::string_view id, const PrecisionContext& ctx);

}  // namespace feasikit
