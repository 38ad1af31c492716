#include "feasikit/sets/plane_sets.hpp"

#include "feasikit/numerics/errors.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace feasikit {

Point2 project_horizontal_line(const Point2& p, const Scalar& height) { return {p.x, height}; }

Point2 project_circle(const Point2& p) {
    if (p.x.is_zero() && p.z.is_zero()) return {Scalar(1), Scalar(0)};
    const Scalar r = p.radius();
    return {p.x / r, p.z / r};
}

namespace {

constexpr int kGraphStarts = 33;
constexpr int kNewtonBudget = 100;

struct Candidate {
    Scalar t;
    Scalar dist2;
};

std::optional<Scalar> newton_stationary(Scalar t, const Point2& p, const AnalyticCurve& curve,
                                        const Scalar& step_tol, const Scalar& blowup) {
    for (int it = 0; it < kNewtonBudget; ++it) {
        const Scalar ft = curve.f(t);
        const Scalar dft = curve.df(t);
        const Scalar g = (t - p.x) + (ft - p.z) * dft;
        const Scalar dg = 1 + dft * dft + (ft - p.z) * curve.ddf(t);
        if (dg.is_zero() || !dg.is_finite()) return std::nullopt;
        const Scalar step = g / dg;
        t -= step;
        if (!t.is_finite() || abs(t) > blowup) return std::nullopt;
        if (abs(step) <= step_tol * max(Scalar(1), abs(t))) {
            // One polishing step: Newton doubles the correct digits.
            const Scalar f2 = curve.f(t);
            const Scalar df2 = curve.df(t);
            const Scalar dg2 = 1 + df2 * df2 + (f2 - p.z) * curve.ddf(t);
            if (!dg2.is_zero()) t -= ((t - p.x) + (f2 - p.z) * df2) / dg2;
            return t;
        }
    }
    return std::nullopt;
}

}  // namespace

Point2 project_graph(const Point2& p_in, const AnalyticCurve& curve, const PrecisionContext& ctx) {
    const Point2 p{p_in.x.with_bits(std::max(p_in.x.bits(), ctx.bits())),
                   p_in.z.with_bits(std::max(p_in.z.bits(), ctx.bits()))};
    const Scalar half_width = 2 * (1 + abs(p.z));
    const Scalar spacing = 2 * half_width / (kGraphStarts - 1);
    const Scalar step_tol = ctx.eps(5);
    const Scalar residual_tol = ctx.eps(15);
    const Scalar tie_tol = ctx.eps(15);
    const Scalar blowup = 1000000 * (1 + abs(p.x) + abs(p.z));

    std::optional<Candidate> best;
    for (int k = 0; k < kGraphStarts; ++k) {
        const Scalar start = p.x - half_width + k * spacing;
        auto root = newton_stationary(start, p, curve, step_tol, blowup);
        if (!root) continue;
        const Scalar& t = *root;
        const Scalar ft = curve.f(t);
        const Scalar residual = abs((t - p.x) + (ft - p.z) * curve.df(t));
        if (residual > residual_tol * max(Scalar(1), abs(t) + abs(ft))) continue;
        Scalar d2 = square(t - p.x) + square(ft - p.z);
        if (!best) {
            best = Candidate{t, std::move(d2)};
            continue;
        }
        const Scalar gap = d2 - best->dist2;
        const bool tie = abs(gap) <= tie_tol * max(Scalar(1), best->dist2);
        if ((!tie && gap < 0) || (tie && t < best->t)) best = Candidate{t, std::move(d2)};
    }
    if (!best) {
        throw ConvergenceError("project_graph: Newton failed from every start for curve '" + curve.id() +
                               "' at (" + p.x.to_string(20) + ", " + p.z.to_string(20) + ")");
    }
    return {best->t, curve.f(best->t)};
}

PlaneSet xaxis_set() {
    return PlaneSet("xaxis", [](const Point2& p) { return Point2{p.x, Scalar::zero(p.z.bits())}; });
}

PlaneSet horizontal_line_set(const Scalar& height) {
    return PlaneSet("hline:" + height.to_string(), [height](const Point2& p) { return project_horizontal_line(p, height); });
}

PlaneSet unit_circle_set() { return PlaneSet("circle", [](const Point2& p) { return project_circle(p); }); }

PlaneSet graph_set(const AnalyticCurve& curve, const PrecisionContext& ctx) {
    return PlaneSet("graph:" + curve.id(), [curve, ctx](const Point2& p) { return project_graph(p, curve, ctx); });
}

PlaneSet plane_set_from_id(std::string_view id, const PrecisionContext& ctx) {
    if (id == "xaxis") return xaxis_set();
    if (id == "circle") return unit_circle_set();
    if (id.starts_with("hline:")) return horizontal_line_set(ctx.parse(id.substr(6)));
    if (id.starts_with("graph:")) return graph_set(curve_from_id(id.substr(6), ctx), ctx);
    throw std::invalid_argument("unknown plane set id '" + std::string(id) + "'");
}

}  // namespace feasikit
