#include "feasikit/theory/probes.hpp"

#include "feasikit/numerics/errors.hpp"
#include "feasikit/solvers/trace_io.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace feasikit {

ProbeGrid ProbeGrid::log_spaced(int first_exp, int last_exp, int count, int n_angles, const PrecisionContext& ctx) {
    if (count < 2 || n_angles < 1 || last_exp <= first_exp) {
        throw std::invalid_argument("log_spaced: need count >= 2, n_angles >= 1 and last_exp > first_exp");
    }
    ProbeGrid grid;
    const Scalar ln10 = log(ctx.num(10));
    for (int k = 0; k < count; ++k) {
        // exponent = -(first + k (last - first) / (count - 1))
        const Scalar e = -(ctx.num(first_exp) + ctx.num(k) * (last_exp - first_exp) / (count - 1));
        grid.radii.push_back(exp(e * ln10));
    }
    const Scalar two_pi = 2 * ctx.pi();
    for (int k = 0; k < n_angles; ++k) grid.angles.push_back(two_pi * (2 * k + 1) / (2 * n_angles));
    return grid;
}

ProbeGrid ProbeGrid::defaults(const PrecisionContext& ctx) { return log_spaced(1, 10, 10, 24, ctx); }

void ProbeGrid::validate() const {
    if (radii.size() < 2 || angles.empty()) throw std::invalid_argument("probe grid needs >= 2 radii and >= 1 angle");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0)) throw std::invalid_argument("probe grid radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1])) throw std::invalid_argument("probe grid radii must decrease");
    }
}

namespace {

struct PointResult {
    std::vector<ProbeRow> rows;
    std::string skipped;
    bool unbounded = false;
};

template <typename Eval>
std::vector<PointResult> evaluate_grid(const ProbeGrid& grid, Eval eval) {
    grid.validate();
    const std::size_t n_r = grid.radii.size();
    const std::size_t n_t = grid.angles.size();
    std::vector<PointResult> out(n_r * n_t);
    const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
        const std::size_t ri = static_cast<std::size_t>(idx) / n_t;
        const std::size_t ti = static_cast<std::size_t>(idx) % n_t;
        try {
            out[idx] = eval(grid.radii[ri], grid.angles[ti]);
        } catch (const NumericalError& e) {
            out[idx].skipped = "R=" + grid.radii[ri].to_string(6) + " theta=" + grid.angles[ti].to_string(8) + ": " + e.what();
        }
    }
    return out;
}

ProbeRow make_row(const Scalar& r, const Scalar& theta, Scalar value, Scalar target, std::string quantity,
                  const ProbeOptions& opts) {
    if (opts.target_shift) target += *opts.target_shift;
    Scalar err = abs(value - target);
    return {r, theta, std::move(value), std::move(target), std::move(err), std::move(quantity)};
}

// Checks every (quantity, angle) series against an O(R) band fitted on the
// two largest radii: allowed(R) = 2 C R + floor with C = max |err| / R there.
void apply_bands(ProbeReport& report, const std::vector<PointResult>& points, const ProbeGrid& grid,
                 const PrecisionContext& ctx) {
    const std::size_t n_t = grid.angles.size();
    const Scalar floor = ctx.eps(30);
    std::map<std::pair<std::string, std::size_t>, std::vector<const ProbeRow*>> series;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        if (!points[idx].skipped.empty()) {
            report.skipped.push_back(points[idx].skipped);
            continue;
        }
        for (const auto& row : points[idx].rows) {
            report.rows.push_back(row);
            series[{row.quantity, idx % n_t}].push_back(&row);
        }
    }
    Scalar worst = Scalar::zero(ctx.bits());
    for (const auto& [key, rows] : series) {
        if (rows.size() < 2) continue;
        const Scalar c = max(rows[0]->abs_err / rows[0]->radius, rows[1]->abs_err / rows[1]->radius);
        for (std::size_t k = 2; k < rows.size(); ++k) {
            const Scalar allowed = 2 * c * rows[k]->radius + floor;
            worst = max(worst, rows[k]->abs_err - allowed);
        }
    }
    report.max_violation = worst;
    report.passed = !report.rows.empty() && worst.is_zero();
}

Scalar nu_of(const Scalar& theta, const CurveTaylor& taylor, const ProbeOptions& opts) {
    return opts.nu_fn ? opts.nu_fn(theta, taylor) : nu(theta, taylor);
}

Scalar pow3(const Scalar& a) { return a * a * a; }

}  // namespace

ProbeReport probe_zeta_limit(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                             const ProbeOptions& opts) {
    const CurveTaylor taylor(curve, ctx);
    auto points = evaluate_grid(grid, [&](const Scalar& r, const Scalar& theta) {
        const ZetaTerms z = zeta_terms(r, theta, curve);
        PointResult res;
        res.rows.push_back(make_row(r, theta, (z.zeta1 - z.zeta2 - z.zeta3) / (r * r), nu_of(theta, taylor, opts),
                                    "zeta", opts));
        return res;
    });
    ProbeReport report{"zeta", curve.id(), {}, Scalar(), {}, {}, false};
    apply_bands(report, points, grid, ctx);
    return report;
}

ProbeReport probe_denominator_limit(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                                    const ProbeOptions& opts) {
    const Scalar& a = curve.slope();
    auto points = evaluate_grid(grid, [&](const Scalar& r, const Scalar& theta) {
        const Scalar x = r * cos(theta);
        const Scalar z = r * sin(theta);
        const Scalar fx = curve.f(x);
        const Scalar dfx = curve.df(x);
        const Scalar shifted = x + z * dfx;
        const Scalar df_shift = curve.df(shifted);
        if (abs(dfx) <= ctx.col_tol() || abs(df_shift) <= ctx.col_tol()) throw DomainError("f' vanishes");
        const Scalar denom = z * curve.f(shifted) / df_shift - fx * (z - fx) / dfx;
        const ZetaTerms zt = zeta_terms(r, theta, curve);
        const Scalar combo = z * zt.zeta1 - (z - fx) * zt.zeta3;
        PointResult res;
        res.rows.push_back(make_row(r, theta, denom / (r * r), a, "denominator", opts));
        res.rows.push_back(make_row(r, theta, combo / (r * r), pow3(a), "numerator_a3", opts));
        return res;
    });
    ProbeReport report{"denominator", curve.id(), {}, Scalar(), {}, {}, false};
    apply_bands(report, points, grid, ctx);
    return report;
}

ProbeReport probe_one_minus_h(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                              const ProbeOptions& opts) {
    const CurveTaylor taylor(curve, ctx);
    const Scalar& a = curve.slope();
    auto points = evaluate_grid(grid, [&](const Scalar& r, const Scalar& theta) {
        const Point2 w = Point2::polar(r, theta);
        const Scalar h = h_coeff(w, curve, ctx);
        const Scalar target = (sin(theta) - a * cos(theta)) * nu_of(theta, taylor, opts) / pow3(a);
        PointResult res;
        res.rows.push_back(make_row(r, theta, (1 - h) / r, target, "one_minus_h", opts));
        return res;
    });
    ProbeReport report{"one-minus-h", curve.id(), {}, Scalar(), {}, {}, false};
    apply_bands(report, points, grid, ctx);
    return report;
}

Point2 lt_polar_assembly(const Point2& w, const Scalar& h, const CurveTaylor& taylor) {
    const Scalar r = w.radius();
    const Scalar theta = w.angle();
    const Scalar& a = taylor.a();
    const Scalar x = w.x;
    const Scalar one_minus_h_over_r = (1 - h) / r;
    const Scalar ct = cos(theta);
    const Scalar second = r * r * sin(theta) * one_minus_h_over_r;
    const Scalar first = r * r * ct / (a + x * taylor.c(x)) *
                         (a * one_minus_h_over_r + ct * (taylor.c(x) - taylor.b(x) * h));
    return {first, second};
}

RatioReport probe_ratio(const ProbeGrid& grid, const AnalyticCurve& curve, const PrecisionContext& ctx,
                        const ProbeOptions& opts) {
    const CurveTaylor taylor(curve, ctx);
    const DrOperator<Point2> op = axis_graph_operator(curve, ctx);
    const Scalar vanish = ctx.eps(10);
    auto points = evaluate_grid(grid, [&](const Scalar& r, const Scalar& theta) {
        const Point2 y = Point2::polar(r, theta);
        const LtClosedForm lt = lt_closed_form(y, op, curve, ctx);
        const Scalar w_norm = lt.w.radius();
        const Scalar l1 = abs(lt.result.x) + abs(lt.result.z);
        PointResult res;
        if (l1 <= vanish * w_norm) {
            res.unbounded = true;
            res.rows.push_back(make_row(r, theta, Scalar::infinity(), Scalar::infinity(), "ratio", opts));
            res.rows.back().abs_err = Scalar::zero(ctx.bits());
            return res;
        }
        const Point2 oracle = lt_polar_assembly(lt.w, lt.h, taylor);
        const Scalar w2 = w_norm * w_norm;
        res.rows.push_back(make_row(r, theta, w2 / l1, w2 / (abs(oracle.x) + abs(oracle.z)), "ratio", opts));
        return res;
    });

    RatioReport out;
    out.base = ProbeReport{"ratio", curve.id(), {}, Scalar(), {}, {}, false};
    const std::size_t n_t = grid.angles.size();
    const Scalar oracle_tol = ctx.eps(30);
    Scalar worst = Scalar::zero(ctx.bits());
    out.radius_min.assign(grid.radii.size(), Scalar::infinity());
    out.m_est = Scalar::infinity();
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const auto& p = points[idx];
        if (!p.skipped.empty()) {
            out.base.skipped.push_back(p.skipped);
            continue;
        }
        const ProbeRow& row = p.rows.front();
        out.base.rows.push_back(row);
        if (p.unbounded) {
            ++out.unbounded;
            continue;
        }
        worst = max(worst, row.abs_err - oracle_tol * max(Scalar(1), abs(row.value)));
        const std::size_t ri = idx / n_t;
        out.radius_min[ri] = min(out.radius_min[ri], row.value);
        out.m_est = min(out.m_est, row.value);
    }
    const Scalar& first = out.radius_min.front();
    const Scalar& last = out.radius_min.back();
    const bool no_decay = !last.is_finite() || (first.is_finite() && last >= first / 2);
    out.bounded_below = out.m_est > 0 && no_decay;
    out.base.max_violation = worst;
    out.base.passed = !out.base.rows.empty() && out.bounded_below && worst.is_zero();
    out.base.summary = {{"m_est", out.m_est.to_string(30)},
                        {"bounded_below", out.bounded_below ? "true" : "false"},
                        {"unbounded_points", std::to_string(out.unbounded)},
                        {"first_radius_min", first.to_string(30)},
                        {"last_radius_min", last.to_string(30)}};
    return out;
}

void write_probe_csv(std::ostream& os, const ProbeReport& report, const PrecisionContext& ctx) {
    Metadata meta{{"probe", report.probe},
                  {"curve", report.curve},
                  {"precision", std::to_string(ctx.digits())},
                  {"verdict", report.passed ? "pass" : "fail"},
                  {"max_violation", report.max_violation.to_string(30)},
                  {"skipped", std::to_string(report.skipped.size())}};
    for (const auto& kv : report.summary) meta.push_back(kv);
    write_metadata(os, meta);
    os << "R,theta,value,target,abs_err,quantity\n";
    for (const auto& row : report.rows) {
        os << row.radius.to_string() << ',' << row.theta.to_string() << ',' << row.value.to_string() << ','
           << row.target.to_string() << ',' << row.abs_err.to_string() << ',' << row.quantity << '\n';
    }
}

}  // namespace feasikit
