#pragma once

#include "feasikit/numerics/errors.hpp"
#include "feasikit/numerics/matrix.hpp"
#include "feasikit/numerics/precision.hpp"
#include "feasikit/sets/feasibility_set.hpp"

#include <concepts>
#include <utility>

namespace feasikit {

/// A real inner-product space element: the plane or symmetric matrices.
template <typename P>
concept InnerProductPoint = requires(const P& a, const P& b, const Scalar& s) {
    { a + b } -> std::convertible_to<P>;
    { a - b } -> std::convertible_to<P>;
    { s * a } -> std::convertible_to<P>;
    { 2 * a } -> std::convertible_to<P>;
    { inner(a, b) } -> std::convertible_to<Scalar>;
    { norm(a) } -> std::convertible_to<Scalar>;
};

/// Douglas-Rachford operator T = (I + R_second R_first) / 2.
template <InnerProductPoint P>
struct DrOperator {
    FeasibilitySet<P> first;
    FeasibilitySet<P> second;

    [[nodiscard]] P operator()(const P& p) const { return (p + reflect(second, reflect(first, p))) / 2; }
};

template <InnerProductPoint P>
P dr_step(const DrOperator<P>& op, const P& p) {
    return op(p);
}

/// Everything computed during one Lyapunov-surrogate update.
template <InnerProductPoint P>
struct LtUpdateRecord {
    P v0, v1, v2;
    P u1, u2;
    Scalar eta;  // Gram determinant |u1|^2 |u2|^2 - <u1,u2>^2
    Scalar mu1, mu2;
    P result;
    bool collinear = false;
};

/// One Lyapunov-surrogate update from p.
///
/// With v1 = T v0, v2 = T v1, the result is the point u of the affine span
/// of v0, v1, v2 with <u - v1, v1 - v0> = <u - v2, v2 - v1> = 0. When the
/// three iterates are collinear (eta <= col_tol |u1|^2 |u2|^2) the update
/// falls back to v1.
template <InnerProductPoint P>
LtUpdateRecord<P> lt_step(const DrOperator<P>& op, const P& p, const PrecisionContext& ctx) {
    LtUpdateRecord<P> rec{p, op(p), p, p, p, Scalar(), Scalar(), Scalar(), p, false};
    rec.v2 = op(rec.v1);
    rec.u1 = rec.v1 - rec.v0;
    rec.u2 = rec.v2 - rec.v0;
    const Scalar n11 = inner(rec.u1, rec.u1);
    const Scalar n22 = inner(rec.u2, rec.u2);
    const Scalar n12 = inner(rec.u1, rec.u2);
    rec.eta = n11 * n22 - n12 * n12;

    auto fall_back = [&] {
        rec.collinear = true;
        rec.mu1 = Scalar(1);
        rec.mu2 = Scalar(0);
        rec.result = rec.v1;
        return rec;
    };
    if (rec.eta <= ctx.col_tol() * n11 * n22) return fall_back();

    const Mat2 system{{{n11, n12}, {n12 - n11, n22 - n12}}};
    const Vec2 rhs{n11, n22 - n12};
    try {
        auto [m1, m2] = solve2x2(system, rhs, ctx);
        rec.mu1 = std::move(m1);
        rec.mu2 = std::move(m2);
    } catch (const SingularMatrixError&) {
        return fall_back();
    }
    rec.result = rec.v0 + rec.mu1 * rec.u1 + rec.mu2 * rec.u2;
    return rec;
}

/// Projected LT: the LT update applied after projecting onto the affine set.
template <InnerProductPoint P>
P plt_step(const DrOperator<P>& op, const FeasibilitySet<P>& affine, const P& p, const PrecisionContext& ctx) {
    return lt_step(op, affine.project(p), ctx).result;
}

}  // namespace feasikit
