#pragma once

#include "feasikit/theory/closed_form.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace feasikit {

/// Polar sample points (R, theta) approaching the origin.
struct ProbeGrid {
    std::vector<Scalar> radii;   // strictly decreasing, all > 0
    std::vector<Scalar> angles;  // in [0, 2pi)

    /// Radii 10^-1 ... 10^-10 and 24 angles (k + 1/2) 2pi / 24, which keep
    /// at least 0.13 rad from every multiple of pi/2.
    static ProbeGrid defaults(const PrecisionContext& ctx);
    /// `count` log-spaced radii from 10^-first_exp to 10^-last_exp and
    /// `n_angles` half-offset angles.
    static ProbeGrid log_spaced(int first_exp, int last_exp, int count, int n_angles, const PrecisionContext& ctx);

    /// Throws std::invalid_argument on an empty grid, a non-positive or non-decreasing radius.
    void validate() const;
};

struct ProbeRow {
    Scalar radius;
    Scalar theta;
    Scalar value;
    Scalar target;
    Scalar abs_err;
    std::string quantity;
};

struct ProbeReport {
    std::string probe;
    std::string curve;
    std::vector<ProbeRow> rows;
    /// Largest excess of abs_err over its allowed band.
    Scalar max_violation;
    /// Grid points where a formula degenerated, with the reason.
    std::vector<std::string> skipped;
    /// Extra `key: value` lines for the CSV metadata block.
    std::vector<std::pair<std::string, std::string>> summary;
    bool passed = false;
};

/// Probe of ||T^2 y||^2 / ||L_T y||_1 as y -> 0.
struct RatioReport {
    ProbeReport base;
    std::vector<Scalar> radius_min;  // per radius, over angles; +inf when every ratio is unbounded
    Scalar m_est;                    // overall minimum of finite ratios (+inf if none)
    int unbounded = 0;               // grid points where L_T y vanished to working precision
    bool bounded_below = false;
};

/// Test hooks: replace nu, or shift every target, to confirm the probes can fail.
struct ProbeOptions {
    std::function<Scalar(const Scalar&, const CurveTaylor&)> nu_fn;
    std::optional<Scalar> target_shift;
};

/// (zeta1 - zeta2 - zeta3) / R^2 -> nu(theta).
ProbeReport probe_zeta_limit(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                             const ProbeOptions& opts = {});

/// [z g(x + z f'(x)) - f(x)(z - f(x)) / f'(x)] / R^2 -> a and
/// [z zeta1 - (z - f(x)) zeta3] / R^2 -> a^3.
ProbeReport probe_denominator_limit(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                                    const ProbeOptions& opts = {});

/// (1 - h) / R -> (sin(theta) - a cos(theta)) nu(theta) / a^3.
ProbeReport probe_one_minus_h(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                              const ProbeOptions& opts = {});

/// Ratio over y = (R cos theta, R sin theta), each value cross-checked
/// against the polar assembly of the L_T coordinates.
RatioReport probe_ratio(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                        const ProbeOptions& opts = {});

/// L_T coordinates assembled from w's polar form and the Taylor tails:
///   (L_T y)_2 = R^2 sin(theta) (1 - h)/R
///   (L_T y)_1 = R^2 cos(theta) / (a + x c(x)) (a (1 - h)/R + cos(theta)(c(x) - b(x) h))
Point2 lt_polar_assembly(const Point2& w, const Scalar& h, const CurveTaylor& taylor);

/// CSV with columns R,theta,value,target,abs_err,quantity after a `#` metadata block.
void write_probe_csv(std::ostream& os, const ProbeReport& report, const PrecisionContext& ctx);

}  // namespace feasikit
