#include "feasikit/theory/closed_form.hpp"

#include "feasikit/numerics/errors.hpp"
#include "feasikit/numerics/matrix.hpp"

namespace feasikit {

DrOperator<Point2> axis_graph_operator(const AnalyticCurve& curve, const PrecisionContext& ctx) {
    return {xaxis_set(), graph_set(curve, ctx)};
}

Point2 t_inverse(const Point2& w, const AnalyticCurve& curve) {
    return {w.x + w.z * curve.df(w.x), w.z - curve.f(w.x)};
}

Point2 lyapunov_grad(const Point2& w, const AnalyticCurve& curve, const PrecisionContext& ctx) {
    const Scalar d = curve.df(w.x);
    if (abs(d) <= ctx.col_tol()) throw DomainError("lyapunov_grad: f'(x) vanishes at x = " + w.x.to_string(20));
    return {curve.f(w.x) / d, w.z};
}

namespace {

// f(t) / f'(t), guarded.
Scalar newton_ratio(const Scalar& t, const AnalyticCurve& curve, const PrecisionContext& ctx) {
    const Scalar d = curve.df(t);
    if (abs(d) <= ctx.col_tol()) throw DomainError("f'(t) vanishes at t = " + t.to_string(20));
    return curve.f(t) / d;
}

}  // namespace

Scalar h_coeff(const Point2& w, const AnalyticCurve& curve, const PrecisionContext& ctx) {
    const Scalar& x = w.x;
    const Scalar& z = w.z;
    const Scalar fx = curve.f(x);
    const Scalar dfx = curve.df(x);
    const Scalar g_shift = newton_ratio(x + z * dfx, curve, ctx);
    const Scalar g_x = newton_ratio(x, curve, ctx);

    const Scalar numerator = (z - fx) * z * dfx + fx * g_shift;
    const Scalar term_a = z * g_shift;
    const Scalar term_b = g_x * (z - fx);
    const Scalar denominator = term_a - term_b;
    if (abs(denominator) <= ctx.col_tol() * (abs(term_a) + abs(term_b))) {
        throw DomainError("h_coeff: vanishing denominator at (" + x.to_string(20) + ", " + z.to_string(20) + ")");
    }
    return numerator / denominator;
}

std::pair<Scalar, Scalar> gamma_system(const Point2& w, const AnalyticCurve& curve, const PrecisionContext& ctx) {
    const Scalar& x = w.x;
    const Scalar& z = w.z;
    const Scalar fx = curve.f(x);
    const Scalar dfx = curve.df(x);
    const Mat2 lhs{{{-newton_ratio(x, curve, ctx), newton_ratio(x + z * dfx, curve, ctx)}, {-z, z - fx}}};
    const Vec2 rhs{z * dfx, -fx};
    auto [g1, g2] = solve2x2(lhs, rhs, ctx);
    return {std::move(g1), std::move(g2)};
}

LtClosedForm lt_closed_form(const Point2& y, const DrOperator<Point2>& op, const AnalyticCurve& curve,
                            const PrecisionContext& ctx) {
    Point2 w = op(op(y));
    if (w.x.is_zero() && w.z.is_zero()) return {w, Scalar(1), w};
    Scalar h = h_coeff(w, curve, ctx);
    Point2 result{w.x - h * newton_ratio(w.x, curve, ctx), w.z - h * w.z};
    return {std::move(w), std::move(h), std::move(result)};
}

Scalar linear_rate(const AnalyticCurve& curve, const PrecisionContext& ctx) {
    const Scalar a = curve.slope().with_bits(ctx.bits());
    return 1 / sqrt(1 + a * a);
}

CurveTaylor::CurveTaylor(AnalyticCurve curve, const PrecisionContext& ctx)
    : curve_(std::move(curve)), switch_radius_(Scalar::pow10(-(ctx.digits() / 2), ctx.bits())) {
    const Scalar second = curve_.ddf(Scalar::zero(ctx.bits()));
    b0_ = second / 2;
    c0_ = second;
}

Scalar CurveTaylor::b(const Scalar& t) const {
    if (abs(t) < switch_radius_) return b0_;
    return (curve_.f(t) - a() * t) / (t * t);
}

Scalar CurveTaylor::c(const Scalar& t) const {
    if (abs(t) < switch_radius_) return c0_;
    return (curve_.df(t) - a()) / t;
}

Scalar nu(const Scalar& theta, const CurveTaylor& taylor) {
    const Scalar& a = taylor.a();
    const Scalar s = sin(theta);
    return a * a * s * (taylor.b0() - taylor.c0()) * (a * s + 2 * cos(theta));
}

ZetaTerms zeta_terms(const Scalar& radius, const Scalar& theta, const AnalyticCurve& curve) {
    const Scalar x = radius * cos(theta);
    const Scalar z = radius * sin(theta);
    const Scalar dfx = curve.df(x);
    const Scalar shifted = x + z * dfx;
    const Scalar df_shift = curve.df(shifted);
    return {curve.f(shifted) * dfx, z * dfx * dfx * df_shift, curve.f(x) * df_shift};
}

}  // namespace feasikit
