#pragma once

#include "feasikit/solvers/operators.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace feasikit {

enum class Method { dr, lt, plt };
enum class TerminatedBy { tolerance, max_iter, exact_zero, stagnation };

std::string_view to_string(Method m);
std::string_view to_string(TerminatedBy t);
/// Accepts "dr", "lt", "plt".
Method parse_method(std::string_view text);

struct StopRule {
    Scalar tol;
    int max_iter = 200;
    int stagnation_window = 5;

    /// tol = 10^-(digits - 20).
    static StopRule defaults(const PrecisionContext& ctx) { return {ctx.eps(20), 200, 5}; }
};

/// Iteration history of one run. Entry 0 is the starting point; step_seconds[0] is 0.
template <InnerProductPoint P>
struct Trace {
    Method method = Method::dr;
    std::vector<P> iterates;
    std::vector<Scalar> errors;
    std::vector<double> step_seconds;
    TerminatedBy terminated_by = TerminatedBy::max_iter;

    [[nodiscard]] int iterations() const { return static_cast<int>(errors.size()) - 1; }
    [[nodiscard]] bool solved() const {
        return terminated_by == TerminatedBy::tolerance || terminated_by == TerminatedBy::exact_zero;
    }
};

/// Thresholds that classify how a run ended.
///
/// floor: 10^-(digits - 10), the arithmetic floor.
/// jump: an error this large or larger on the step before reaching the floor
///       means the floor was reached in one step (finite termination).
/// stagnation_level: stagnation is only declared below this error.
struct TerminationThresholds {
    Scalar floor;
    Scalar jump;
    Scalar stagnation_level;

    static TerminationThresholds from(const PrecisionContext& ctx) {
        const int usable = ctx.digits() - 10;
        return {ctx.eps(10), Scalar::pow10(-(usable / 4), ctx.bits()), Scalar::pow10(-(usable / 2), ctx.bits())};
    }
};

template <InnerProductPoint P>
P method_step(Method method, const DrOperator<P>& op, const FeasibilitySet<P>* affine, const P& p,
              const PrecisionContext& ctx) {
    switch (method) {
        case Method::dr:
            return dr_step(op, p);
        case Method::lt:
            return lt_step(op, p, ctx).result;
        case Method::plt:
            if (affine == nullptr) throw std::invalid_argument("plt requires an affine set");
            return plt_step(op, *affine, p, ctx);
    }
    throw std::logic_error("unreachable");
}

/// Iterates `method` from p0, measuring the distance to `reference` after every step.
///
/// Stops on: error <= tol (tolerance); error at the arithmetic floor reached
/// in a single step from a non-negligible error, or exactly zero
/// (exact_zero); no improvement over `stagnation_window` steps once the
/// error is below the stagnation level (stagnation); or max_iter.
template <InnerProductPoint P>
Trace<P> run(Method method, const DrOperator<P>& op, const FeasibilitySet<P>* affine, const P& p0,
             const StopRule& stop, const P& reference, const PrecisionContext& ctx) {
    if (stop.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (!(stop.tol > 0)) throw std::invalid_argument("tol must be positive");
    if (method == Method::plt && affine == nullptr) throw std::invalid_argument("plt requires an affine set");

    const auto limits = TerminationThresholds::from(ctx);
    Trace<P> trace;
    trace.method = method;
    trace.iterates.push_back(p0);
    trace.errors.push_back(distance(p0, reference));
    trace.step_seconds.push_back(0.0);
    if (trace.errors.back() <= stop.tol) {
        trace.terminated_by = TerminatedBy::tolerance;
        return trace;
    }

    P x = p0;
    for (int k = 1; k <= stop.max_iter; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        x = method_step(method, op, affine, x, ctx);
        const auto t1 = std::chrono::steady_clock::now();
        Scalar err = distance(x, reference);
        const Scalar& prev = trace.errors.back();
        const bool zero = err.is_zero() || (err <= limits.floor && prev >= limits.jump);
        const bool within_tol = err <= stop.tol;

        trace.iterates.push_back(x);
        trace.step_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
        trace.errors.push_back(std::move(err));

        if (zero) {
            trace.terminated_by = TerminatedBy::exact_zero;
            return trace;
        }
        if (within_tol) {
            trace.terminated_by = TerminatedBy::tolerance;
            return trace;
        }
        const int w = stop.stagnation_window;
        if (w > 0 && k >= w && trace.errors.back() <= limits.stagnation_level) {
            const Scalar& anchor = trace.errors[k - w];
            bool improved = false;
            for (int j = k - w + 1; j <= k; ++j) improved = improved || trace.errors[j] < anchor;
            if (!improved) {
                trace.terminated_by = TerminatedBy::stagnation;
                return trace;
            }
        }
    }
    trace.terminated_by = TerminatedBy::max_iter;
    return trace;
}

/// run() for dr and lt, which need no affine set.
template <InnerProductPoint P>
Trace<P> run(Method method, const DrOperator<P>& op, const P& p0, const StopRule& stop, const P& reference,
             const PrecisionContext& ctx) {
    return run(method, op, static_cast<const FeasibilitySet<P>*>(nullptr), p0, stop, reference, ctx);
}

template <InnerProductPoint P>
struct FixedPointEstimate {
    P point;
    int iterations = 0;
    bool converged = false;
};

/// Runs `method` from p0 for up to 2 * max_iter steps and returns the last
/// iterate; stops early once a step moves less than 10^-(digits - 10).
template <InnerProductPoint P>
FixedPointEstimate<P> estimate_fixed_point(Method method, const DrOperator<P>& op, const FeasibilitySet<P>* affine,
                                           const P& p0, const StopRule& stop, const PrecisionContext& ctx) {
    const Scalar step_tol = ctx.eps(10);
    FixedPointEstimate<P> out{p0, 0, false};
    for (int k = 1; k <= 2 * stop.max_iter; ++k) {
        P next = method_step(method, op, affine, out.point, ctx);
        const Scalar moved = distance(next, out.point);
        out.point = std::move(next);
        out.iterations = k;
        if (moved <= step_tol * max(Scalar(1), norm(out.point))) {
            out.converged = true;
            break;
        }
    }
    return out;
}

template <InnerProductPoint P>
FixedPointEstimate<P> estimate_fixed_point(Method method, const DrOperator<P>& op, const P& p0, const StopRule& stop,
                                           const PrecisionContext& ctx) {
    return estimate_fixed_point(method, op, static_cast<const FeasibilitySet<P>*>(nullptr), p0, stop, ctx);
}

}  // namespace feasikit
