#include "feasikit/experiment/batch.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace feasikit {

double TrialResult::seconds() const { return std::accumulate(step_seconds.begin(), step_seconds.end(), 0.0); }

TrialSet<Point2> plane_trials(const PlaneProblem& problem, std::size_t n, std::uint64_t seed,
                              const PrecisionContext& ctx) {
    TrialSet<Point2> set = sample_disk(*problem.reference, problem.sample_radius, n, seed, ctx);
    set.problem = problem.id;
    return set;
}

namespace {

void validate(const BatchConfig& config) {
    if (config.methods.empty()) throw std::invalid_argument("batch needs at least one method");
    if (config.trials == 0) throw std::invalid_argument("batch needs at least one trial");
}

// Calls job(trial, method_index, out) for every pair, serially or on OpenMP threads.
template <typename Job>
BatchResult dispatch(const BatchConfig& config, Job job, bool parallel, int jobs) {
    BatchResult out{config, std::vector<std::vector<TrialResult>>(config.trials,
                                                                  std::vector<TrialResult>(config.methods.size()))};
    const std::size_t n_m = config.methods.size();
    const long total = static_cast<long>(config.trials * n_m);
    if (!parallel) {
        for (long k = 0; k < total; ++k) job(k / n_m, k % n_m, out.runs[k / n_m][k % n_m]);
        return out;
    }
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(total));
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long k = 0; k < total; ++k) {
        const auto t = static_cast<std::size_t>(k) / n_m;
        const auto m = static_cast<std::size_t>(k) % n_m;
        try {
            job(t, m, out.runs[t][m]);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return out;
}

BatchResult run_batch(const BatchConfig& config, const PrecisionContext& ctx, bool parallel, int jobs) {
    validate(config);
    if (is_matrix_problem(config.problem)) {
        const MatrixProblem problem = matrix_problem(config.problem, config.dim, ctx);
        const auto trials = sample_sym(config.dim, config.trials, config.seed, ctx);
        return dispatch(
            config,
            [&](std::size_t t, std::size_t m, TrialResult& slot) {
                slot = run_trial(problem, config.methods[m], trials.points[t], config.stop, ctx);
            },
            parallel, jobs);
    }
    const PlaneProblem problem = plane_problem(config.problem, ctx);
    const auto trials = plane_trials(problem, config.trials, config.seed, ctx);
    return dispatch(
        config,
        [&](std::size_t t, std::size_t m, TrialResult& slot) {
            slot = run_trial(problem, config.methods[m], trials.points[t], config.stop, ctx);
        },
        parallel, jobs);
}

template <typename Cost>
CostTable costs(const BatchResult& batch, Cost cost) {
    CostTable table;
    for (Method m : batch.config.methods) table.solvers.emplace_back(to_string(m));
    for (const auto& row : batch.runs) {
        std::vector<double> line;
        for (const auto& r : row) line.push_back(r.solved() ? cost(r) : kFailedCost);
        table.costs.push_back(std::move(line));
    }
    return table;
}

}  // namespace

BatchResult run_batch_serial(const BatchConfig& config, const PrecisionContext& ctx) {
    return run_batch(config, ctx, false, 1);
}

BatchResult run_batch_parallel(const BatchConfig& config, const PrecisionContext& ctx, int jobs) {
    return run_batch(config, ctx, true, jobs);
}

CostTable iteration_costs(const BatchResult& batch) {
    return costs(batch, [](const TrialResult& r) { return static_cast<double>(std::max(r.iterations(), 1)); });
}

CostTable time_costs(const BatchResult& batch) {
    return costs(batch, [](const TrialResult& r) { return std::max(r.seconds(), 1e-9); });
}

}  // namespace feasikit
