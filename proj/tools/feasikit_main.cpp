#include "feasikit/analysis/convergence.hpp"
#include "feasikit/analysis/profile.hpp"
#include "feasikit/analysis/records.hpp"
#include "feasikit/experiment/batch.hpp"
#include "feasikit/sets/curve.hpp"
#include "feasikit/solvers/trace_io.hpp"
#include "feasikit/theory/probes.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

using namespace feasikit;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotSolved = 3;
constexpr int kExitNumerical = 4;

struct Common {
    int precision = 0;
    std::string tol;
    int max_iter = 200;
    std::uint64_t seed = 1;
    std::size_t dim = 3;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PrecisionContext make_context(const Common& c) {
    const int digits = c.precision > 0 ? c.precision : PrecisionContext::default_digits_from_env();
    if (digits < PrecisionContext::kMinDigits) {
        throw UsageError("precision must be at least " + std::to_string(PrecisionContext::kMinDigits) + " digits");
    }
    return PrecisionContext(digits);
}

StopRule make_stop(const Common& c, const PrecisionContext& ctx) {
    StopRule stop = StopRule::defaults(ctx);
    if (!c.tol.empty()) stop.tol = ctx.parse(c.tol);
    stop.max_iter = c.max_iter;
    if (!(stop.tol > 0) || stop.max_iter < 1) throw UsageError("tol must be positive and max-iter at least 1");
    return stop;
}

// Opens --out, or returns stdout when it is empty.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* cmd, Common& c, bool solver_flags) {
    cmd->add_option("--precision", c.precision, "Working precision in decimal digits (default 120 or FEASIKIT_PRECISION)");
    cmd->add_option("--out", c.out, "Output CSV path (default stdout)");
    if (!solver_flags) return;
    cmd->add_option("--tol", c.tol, "Error tolerance as a decimal string (default 1e-(digits-20))");
    cmd->add_option("--max-iter", c.max_iter, "Iteration budget")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Seed for starting points")->capture_default_str();
    cmd->add_option("--dim", c.dim, "Matrix dimension for matrix problems")->capture_default_str();
}

Metadata base_meta(const std::string& problem, const Common& c, const PrecisionContext& ctx, const StopRule& stop) {
    Metadata meta{{"problem", problem},
                  {"precision", std::to_string(ctx.digits())},
                  {"seed", std::to_string(c.seed)},
                  {"tol", stop.tol.to_string(30)},
                  {"max_iter", std::to_string(stop.max_iter)}};
    if (is_matrix_problem(problem)) meta.emplace_back("dim", std::to_string(c.dim));
    return meta;
}

// ---- run ----

struct RunArgs {
    Common common;
    std::string problem;
    std::string method = "dr";
    std::string start;
};

Point2 parse_start(const std::string& text, const PrecisionContext& ctx) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--start expects x,z");
    return {ctx.parse(text.substr(0, comma)), ctx.parse(text.substr(comma + 1))};
}

int cmd_run(const RunArgs& a) {
    const PrecisionContext ctx = make_context(a.common);
    const StopRule stop = make_stop(a.common, ctx);
    const Method method = parse_method(a.method);
    Metadata meta = base_meta(a.problem, a.common, ctx, stop);
    meta.insert(meta.begin(), {"method", a.method});

    TrialResult result;
    if (is_matrix_problem(a.problem)) {
        if (!a.start.empty()) throw UsageError("--start applies to plane problems only");
        const MatrixProblem problem = matrix_problem(a.problem, a.common.dim, ctx);
        const auto trials = sample_sym(a.common.dim, 1, a.common.seed, ctx);
        result = run_trial(problem, method, trials.points.front(), stop, ctx);
    } else {
        const PlaneProblem problem = plane_problem(a.problem, ctx);
        const Point2 p0 = a.start.empty() ? plane_trials(problem, 1, a.common.seed, ctx).points.front()
                                          : parse_start(a.start, ctx);
        meta.emplace_back("start", p0.x.to_string(30) + " " + p0.z.to_string(30));
        result = run_trial(problem, method, p0, stop, ctx);
    }
    meta.emplace_back("reference", result.reference_policy);

    Trace<Point2> shape;  // only the scalar columns are written
    shape.method = result.method;
    shape.errors = result.errors;
    shape.step_seconds = result.step_seconds;
    shape.terminated_by = result.terminated_by;
    Output out(a.common.out);
    write_trace_csv(out.stream(), shape, meta);
    return result.solved() ? 0 : kExitNotSolved;
}

// ---- bench ----

struct BenchArgs {
    Common common;
    std::string problem;
    std::vector<std::string> methods;
    std::size_t trials = 100;
    int jobs = 0;
    std::string orders;
};

std::string time_profile_path(const std::string& out) {
    std::filesystem::path p(out);
    std::filesystem::path stem = p.parent_path() / p.stem();
    return stem.string() + ".time" + (p.has_extension() ? p.extension().string() : std::string(".csv"));
}

int cmd_bench(const BenchArgs& a) {
    if (a.methods.size() < 2) throw UsageError("bench needs at least two methods in --methods");
    if (a.trials < 2) throw UsageError("bench needs --trials >= 2");
    const PrecisionContext ctx = make_context(a.common);
    BatchConfig config{a.problem, {}, a.trials, a.common.seed, make_stop(a.common, ctx), a.common.dim};
    for (const auto& m : a.methods) config.methods.push_back(parse_method(m));
    const BatchResult batch = run_batch_parallel(config, ctx, a.jobs);

    Metadata meta = base_meta(a.problem, a.common, ctx, config.stop);
    std::string joined;
    for (const auto& m : a.methods) joined += (joined.empty() ? "" : ",") + m;
    meta.insert(meta.begin(), {"methods", joined});
    meta.emplace_back("trials", std::to_string(a.trials));
    meta.emplace_back("failure", "terminated without reaching tol or exact zero");
    meta.emplace_back("reference", is_matrix_problem(a.problem) ? "fixed point of each method from the same start"
                                                                : "known solution");

    const PerformanceProfile by_iter = performance_profile(iteration_costs(batch), "iterations");
    const PerformanceProfile by_time = performance_profile(time_costs(batch), "seconds");
    if (a.common.out.empty()) {
        write_profile_csv(std::cout, by_iter, meta);
        std::cout << '\n';
        write_profile_csv(std::cout, by_time, meta);
    } else {
        Output iter_out(a.common.out);
        write_profile_csv(iter_out.stream(), by_iter, meta);
        Output time_out(time_profile_path(a.common.out));
        write_profile_csv(time_out.stream(), by_time, meta);
    }

    if (!a.orders.empty()) {
        Output orders(a.orders);
        for (std::size_t t = 0; t < batch.runs.size(); ++t) {
            for (const auto& r : batch.runs[t]) {
                nlohmann::json rec;
                try {
                    rec = order_record(std::string(to_string(r.method)), a.problem, estimate_order(r.errors, ctx));
                } catch (const InsufficientDataError& e) {
                    rec = {{"method", to_string(r.method)}, {"problem", a.problem}, {"error", e.what()}};
                }
                rec["trial"] = t;
                orders.stream() << rec.dump() << '\n';
            }
        }
    }
    return 0;
}

// ---- probe ----

struct ProbeArgs {
    Common common;
    std::string probe;
    std::string curve;
    std::optional<int> radius_first;
    std::optional<int> radius_last;
    std::optional<int> radius_count;
    std::optional<int> angles;
};

int cmd_probe(const ProbeArgs& a) {
    const PrecisionContext ctx = make_context(a.common);
    const AnalyticCurve curve = curve_from_id(a.curve, ctx);
    const ProbeGrid grid = ProbeGrid::log_spaced(a.radius_first.value_or(1), a.radius_last.value_or(10),
                                                 a.radius_count.value_or(10), a.angles.value_or(24), ctx);
    ProbeReport report;
    if (a.probe == "zeta") {
        report = probe_zeta_limit(grid, curve, ctx);
    } else if (a.probe == "denominator") {
        report = probe_denominator_limit(grid, curve, ctx);
    } else if (a.probe == "one-minus-h") {
        report = probe_one_minus_h(grid, curve, ctx);
    } else if (a.probe == "ratio") {
        report = probe_ratio(grid, curve, ctx).base;
    } else {
        throw UsageError("unknown probe '" + a.probe + "' (zeta, denominator, one-minus-h, ratio)");
    }
    Output out(a.common.out);
    write_probe_csv(out.stream(), report, ctx);
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Douglas-Rachford and LT feasibility experiments at arbitrary precision"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Run one method on one starting point and write its trace");
    add_common(run_cmd, run_args.common, true);
    run_cmd->add_option("--problem", run_args.problem, "circle-line, graph:<curve>, psd-s1, psdb-s1, psdb-s11")
        ->required();
    run_cmd->add_option("--method", run_args.method, "dr, lt or plt")->capture_default_str();
    run_cmd->add_option("--start", run_args.start, "Starting point x,z for plane problems (default: seeded draw)");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Run several methods on shared trials and write performance profiles");
    add_common(bench_cmd, bench_args.common, true);
    bench_cmd->add_option("--problem", bench_args.problem, "Problem id")->required();
    bench_cmd->add_option("--methods", bench_args.methods, "Comma-separated methods")->delimiter(',')->required();
    bench_cmd->add_option("--trials", bench_args.trials, "Number of trials")->capture_default_str();
    bench_cmd->add_option("--jobs", bench_args.jobs, "Worker threads (0: machine parallelism)")->capture_default_str();
    bench_cmd->add_option("--orders", bench_args.orders, "Write per-run order estimates as JSON lines");

    ProbeArgs probe_args;
    auto* probe_cmd = app.add_subcommand("probe", "Evaluate a limit probe over a polar grid");
    add_common(probe_cmd, probe_args.common, false);
    probe_cmd->add_option("probe", probe_args.probe, "zeta, denominator, one-minus-h or ratio")->required();
    probe_cmd->add_option("curve", probe_args.curve, "linear:<a>, quad, cubic or sin-shift")->required();
    probe_cmd->add_option("--radius-first", probe_args.radius_first, "Largest radius is 10^-first (default 1)");
    probe_cmd->add_option("--radius-last", probe_args.radius_last, "Smallest radius is 10^-last (default 10)");
    probe_cmd->add_option("--radius-count", probe_args.radius_count, "Number of radii (default 10)");
    probe_cmd->add_option("--angles", probe_args.angles, "Number of angles (default 24)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run_args);
        if (*bench_cmd) return cmd_bench(bench_args);
        return cmd_probe(probe_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
