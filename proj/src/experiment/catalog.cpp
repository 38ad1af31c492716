#include "feasikit/experiment/catalog.hpp"

#include "feasikit/sets/curve.hpp"
#include "feasikit/sets/matrix_sets.hpp"
#include "feasikit/sets/plane_sets.hpp"

#include <stdexcept>

namespace feasikit {

std::vector<std::string> catalog_ids() { return {"circle-line", "graph:<curve-id>", "psd-s1", "psdb-s1", "psdb-s11"}; }

bool is_matrix_problem(std::string_view id) { return id == "psd-s1" || id == "psdb-s1" || id == "psdb-s11"; }

PlaneProblem plane_problem(std::string_view id, const PrecisionContext& ctx) {
    const Scalar half = ctx.ratio(1, 2);
    if (id == "circle-line") {
        PlaneSet line = horizontal_line_set(half);
        return {std::string(id), {line, unit_circle_set()}, line, Point2{sqrt(ctx.num(3)) / 2, half}, half};
    }
    if (id.starts_with("graph:")) {
        const AnalyticCurve curve = curve_from_id(id.substr(6), ctx);
        PlaneSet axis = xaxis_set();
        return {std::string(id), {axis, graph_set(curve, ctx)}, axis,
                Point2{Scalar::zero(ctx.bits()), Scalar::zero(ctx.bits())}, half};
    }
    throw std::invalid_argument("unknown plane problem '" + std::string(id) + "'");
}

MatrixProblem matrix_problem(std::string_view id, std::size_t dim, const PrecisionContext& ctx) {
    if (dim < 2) throw std::invalid_argument("matrix problems need dim >= 2");
    const bool known = is_matrix_problem(id);
    if (!known) throw std::invalid_argument("unknown matrix problem '" + std::string(id) + "'");
    MatrixSet affine = id == "psdb-s11" ? entry11_set() : diag_ones_set();
    MatrixSet cone = id == "psd-s1" ? psd_set(ctx) : psd_boundary_set(ctx);
    return {std::string(id), {affine, cone}, affine, std::nullopt, Scalar::zero(ctx.bits())};
}

}  // namespace feasikit
