#pragma once

#include "feasikit/numerics/precision.hpp"
#include "feasikit/numerics/scalar.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace feasikit {

/// A real-analytic f with f(0) = 0 and f'(0) != 0, plus its first two derivatives.
class AnalyticCurve {
public:
    using Fn = std::function<Scalar(const Scalar&)>;

    /// Throws std::invalid_argument when f(0) != 0 or f'(0) == 0.
    AnalyticCurve(std::string id, Fn f, Fn df, Fn ddf, const PrecisionContext& ctx);

    [[nodiscard]] Scalar f(const Scalar& t) const { return f_(t); }
    [[nodiscard]] Scalar df(const Scalar& t) const { return df_(t); }
    [[nodiscard]] Scalar ddf(const Scalar& t) const { return ddf_(t); }
    /// f'(0).
    [[nodiscard]] const Scalar& slope() const { return slope_; }
    [[nodiscard]] const std::string& id() const { return id_; }

private:
    std::string id_;
    Fn f_;
    Fn df_;
    Fn ddf_;
    Scalar slope_;
};

/// f(t) = a t.
AnalyticCurve linear_curve(const Scalar& a, const PrecisionContext& ctx, std::string id = {});
/// f(t) = t + t^2.
AnalyticCurve quad_curve(const PrecisionContext& ctx);
/// f(t) = 2t + t^3.
AnalyticCurve cubic_curve(const PrecisionContext& ctx);
/// f(t) = sin(t) + t.
AnalyticCurve sin_shift_curve(const PrecisionContext& ctx);

/// Resolves `linear:<a>`, `quad`, `cubic`, `sin-shift`.
AnalyticCurve curve_from_id(std::string_view id, const PrecisionContext& ctx);

}  // namespace feasikit
