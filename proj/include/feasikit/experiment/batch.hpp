#pragma once

#include "feasikit/analysis/profile.hpp"
#include "feasikit/analysis/sampling.hpp"
#include "feasikit/experiment/catalog.hpp"
#include "feasikit/solvers/run.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace feasikit {

/// One method on one starting point, without the iterates.
struct TrialResult {
    Method method = Method::dr;
    std::vector<Scalar> errors;
    std::vector<double> step_seconds;
    TerminatedBy terminated_by = TerminatedBy::max_iter;
    std::string reference_policy;

    [[nodiscard]] int iterations() const { return static_cast<int>(errors.size()) - 1; }
    [[nodiscard]] bool solved() const {
        return terminated_by == TerminatedBy::tolerance || terminated_by == TerminatedBy::exact_zero;
    }
    [[nodiscard]] double seconds() const;
};

template <InnerProductPoint P>
TrialResult to_result(Trace<P> trace, std::string policy) {
    return {trace.method, std::move(trace.errors), std::move(trace.step_seconds), trace.terminated_by,
            std::move(policy)};
}

/// Runs one method against the known reference, or against a fixed point
/// estimated by the same method from the same start (2 max_iter steps).
template <InnerProductPoint P>
TrialResult run_trial(const Problem<P>& problem, Method method, const P& p0, const StopRule& stop,
                      const PrecisionContext& ctx) {
    if (problem.reference) {
        return to_result(run(method, problem.op, &problem.affine, p0, stop, *problem.reference, ctx), "known solution");
    }
    auto est = estimate_fixed_point(method, problem.op, &problem.affine, p0, stop, ctx);
    std::string policy = "fixed point of " + std::string(to_string(method)) + " from the same start after " +
                         std::to_string(est.iterations) + " steps (" + (est.converged ? "converged" : "budget exhausted") +
                         ")";
    return to_result(run(method, problem.op, &problem.affine, p0, stop, est.point, ctx), std::move(policy));
}

struct BatchConfig {
    std::string problem;
    std::vector<Method> methods;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    StopRule stop;
    std::size_t dim = 3;
};

struct BatchResult {
    BatchConfig config;
    /// runs[t][m]: trial t, method config.methods[m].
    std::vector<std::vector<TrialResult>> runs;
};

/// Plane problems sample the disk of radius problem.sample_radius about the
/// reference; matrix problems sample (U + U^T) / 2 of size dim.
TrialSet<Point2> plane_trials(const PlaneProblem& problem, std::size_t n, std::uint64_t seed, const PrecisionContext& ctx);

/// Reference implementation: trials in order on the calling thread.
BatchResult run_batch_serial(const BatchConfig& config, const PrecisionContext& ctx);

/// Same results as run_batch_serial, with (trial, method) pairs spread over
/// `jobs` OpenMP threads (0 = runtime default). Starting points are drawn
/// before dispatch, so the output does not depend on scheduling.
BatchResult run_batch_parallel(const BatchConfig& config, const PrecisionContext& ctx, int jobs = 0);

/// Iteration counts of solved runs (at least 1), kFailedCost otherwise.
CostTable iteration_costs(const BatchResult& batch);
/// Summed step wall time of solved runs, kFailedCost otherwise.
CostTable time_costs(const BatchResult& batch);

}  // namespace feasikit
