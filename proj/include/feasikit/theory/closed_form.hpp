#pragma once

#include "feasikit/numerics/point2.hpp"
#include "feasikit/numerics/precision.hpp"
#include "feasikit/sets/curve.hpp"
#include "feasikit/sets/plane_sets.hpp"
#include "feasikit/solvers/operators.hpp"

#include <utility>

namespace feasikit {

// Closed forms for the pair A = x-axis, B = gra f, with T = T_{A,B} and
// w = (x, z) = T^2 y throughout.

/// DR operator reflecting through the x-axis first, then the graph of `curve`.
DrOperator<Point2> axis_graph_operator(const AnalyticCurve& curve, const PrecisionContext& ctx);

/// Local inverse of T: (x + z f'(x), z - f(x)).
Point2 t_inverse(const Point2& w, const AnalyticCurve& curve);

/// Gradient of the Lyapunov function: (f(x) / f'(x), z).
/// Throws DomainError when f'(x) vanishes.
Point2 lyapunov_grad(const Point2& w, const AnalyticCurve& curve, const PrecisionContext& ctx);

/// Coefficient h(x, z) with L_T y = w - h(w) grad V(w):
///
///        (z - f(x)) z f'(x) + f(x) g(x + z f'(x))
///   h = ------------------------------------------,   g = f / f'.
///        z g(x + z f'(x)) - f(x) (z - f(x)) / f'(x)
///
/// Throws DomainError when the denominator is negligible against its terms.
Scalar h_coeff(const Point2& w, const AnalyticCurve& curve, const PrecisionContext& ctx);

/// Solves the 2x2 system for (gamma1, gamma2) from the two expressions of L_T y.
/// gamma1 equals h_coeff(w). Throws SingularMatrixError on a degenerate w.
std::pair<Scalar, Scalar> gamma_system(const Point2& w, const AnalyticCurve& curve, const PrecisionContext& ctx);

struct LtClosedForm {
    Point2 w;  // T^2 y
    Scalar h;
    Point2 result;
};

/// L_T y from the closed form: (x - h f(x)/f'(x), z - h z) with (x, z) = T^2 y.
/// Returns the origin with h = 1 when T^2 y is exactly the origin.
LtClosedForm lt_closed_form(const Point2& y, const DrOperator<Point2>& op, const AnalyticCurve& curve,
                            const PrecisionContext& ctx);

/// Local linear rate of DR at a transversal intersection: 1 / sqrt(1 + a^2).
Scalar linear_rate(const AnalyticCurve& curve, const PrecisionContext& ctx);

/// f(t) = a t + t^2 b(t),  f'(t) = a + t c(t).
class CurveTaylor {
public:
    CurveTaylor(AnalyticCurve curve, const PrecisionContext& ctx);

    [[nodiscard]] const AnalyticCurve& curve() const { return curve_; }
    [[nodiscard]] const Scalar& a() const { return curve_.slope(); }
    /// Tail of f over t^2; f''(0)/2 near the removable singularity.
    [[nodiscard]] Scalar b(const Scalar& t) const;
    /// Tail of f' over t; f''(0) near the removable singularity.
    [[nodiscard]] Scalar c(const Scalar& t) const;
    [[nodiscard]] const Scalar& b0() const { return b0_; }
    [[nodiscard]] const Scalar& c0() const { return c0_; }

private:
    AnalyticCurve curve_;
    Scalar b0_;
    Scalar c0_;
    Scalar switch_radius_;
};

/// nu(theta) = a^2 sin(theta) (b(0) - c(0)) (a sin(theta) + 2 cos(theta)),
/// the R^2 coefficient of zeta1 - zeta2 - zeta3.
Scalar nu(const Scalar& theta, const CurveTaylor& taylor);

struct ZetaTerms {
    Scalar zeta1;  // f(x + z f'(x)) f'(x)
    Scalar zeta2;  // z f'(x)^2 f'(x + z f'(x))
    Scalar zeta3;  // f(x) f'(x + z f'(x))
};

/// The three zeta terms at (x, z) = (R cos theta, R sin theta).
ZetaTerms zeta_terms(const Scalar& radius, const Scalar& theta, const AnalyticCurve& curve);

}  // namespace feasikit
