#include "feasikit/sets/curve.hpp"

#include <stdexcept>
#include <utility>

namespace feasikit {

AnalyticCurve::AnalyticCurve(std::string id, Fn f, Fn df, Fn ddf, const PrecisionContext& ctx)
    : id_(std::move(id)), f_(std::move(f)), df_(std::move(df)), ddf_(std::move(ddf)) {
    const Scalar origin = Scalar::zero(ctx.bits());
    if (!f_(origin).is_zero()) throw std::invalid_argument("curve '" + id_ + "': f(0) must be 0");
    slope_ = df_(origin);
    if (slope_.is_zero()) throw std::invalid_argument("curve '" + id_ + "': f'(0) must be nonzero (tangential intersection)");
}

AnalyticCurve linear_curve(const Scalar& a, const PrecisionContext& ctx, std::string id) {
    if (id.empty()) id = "linear:" + a.to_string();
    const Scalar zero = Scalar::zero(ctx.bits());
    return AnalyticCurve(
        std::move(id), [a](const Scalar& t) { return a * t; }, [a](const Scalar& t) { return a + 0 * t; },
        [zero](const Scalar&) { return zero; }, ctx);
}

AnalyticCurve quad_curve(const PrecisionContext& ctx) {
    return AnalyticCurve(
        "quad", [](const Scalar& t) { return t + t * t; }, [](const Scalar& t) { return 1 + 2 * t; },
        [](const Scalar& t) { return 2 + 0 * t; }, ctx);
}

AnalyticCurve cubic_curve(const PrecisionContext& ctx) {
    return AnalyticCurve(
        "cubic", [](const Scalar& t) { return 2 * t + t * t * t; }, [](const Scalar& t) { return 2 + 3 * t * t; },
        [](const Scalar& t) { return 6 * t; }, ctx);
}

AnalyticCurve sin_shift_curve(const PrecisionContext& ctx) {
    return AnalyticCurve(
        "sin-shift", [](const Scalar& t) { return sin(t) + t; }, [](const Scalar& t) { return cos(t) + 1; },
        [](const Scalar& t) { return -sin(t); }, ctx);
}

AnalyticCurve curve_from_id(std::string_view id, const PrecisionContext& ctx) {
    if (id == "quad") return quad_curve(ctx);
    if (id == "cubic") return cubic_curve(ctx);
    if (id == "sin-shift") return sin_shift_curve(ctx);
    if (id.starts_with("linear:")) {
        const auto text = id.substr(7);
        return linear_curve(ctx.parse(text), ctx, std::string(id));
    }
    throw std::invalid_argument("unknown curve id '" + std::string(id) + "'");
}

}  // namespace feasikit
