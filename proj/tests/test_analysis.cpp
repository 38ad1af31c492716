#include "feasikit/analysis/convergence.hpp"
#include "feasikit/analysis/profile.hpp"
#include "feasikit/analysis/records.hpp"
#include "feasikit/analysis/sampling.hpp"
#include "feasikit/sets/plane_sets.hpp"
#include "feasikit/solvers/run.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace feasikit;
using namespace testing_support;

namespace {

std::vector<Scalar> geometric(const Scalar& c, const Scalar& r, int n) {
    std::vector<Scalar> out;
    Scalar e = c;
    for (int k = 0; k < n; ++k) out.push_back(e), e = e * r;
    return out;
}

}  // namespace

TEST_CASE("order of a doubly exponential sequence") {
    const PrecisionContext ctx(120);
    std::vector<Scalar> e;
    for (int n = 0; n <= 5; ++n) e.push_back(Scalar::pow10(-(1L << n), ctx.bits()));
    const OrderEstimate est = estimate_order(e, ctx);
    CHECK(close(est.q, Scalar(2), ctx.eps(20)));
    CHECK(close(est.c, Scalar(1), ctx.eps(20)));
    CHECK(est.residual <= ctx.eps(20));
    CHECK(est.last == 5);
    CHECK(est.last - est.first == 4);
}

TEST_CASE("order of a geometric sequence") {
    const PrecisionContext ctx(120);
    const auto e = geometric(Scalar(1), ctx.ratio(1, 2), 30);
    const OrderEstimate est = estimate_order(e, ctx);
    CHECK(close(est.q, Scalar(1), ctx.eps(20)));
    CHECK(close(est.c, ctx.ratio(1, 2), ctx.eps(20)));
}

TEST_CASE("order under multiplicative noise") {
    const PrecisionContext ctx(120);
    std::mt19937_64 rng(83);
    auto e = geometric(ctx.parse("0.3"), ctx.ratio(1, 2), 40);
    for (auto& v : e) v = v * (1 + uniform(rng, -0.01, 0.01, ctx));
    const OrderEstimate est = estimate_order(e, ctx);
    CHECK(est.q >= Scalar(0.9));
    CHECK(est.q <= Scalar(1.1));
    CHECK(est.residual > 0);
}

TEST_CASE("entries at the precision floor are ignored") {
    const PrecisionContext ctx(120);
    std::vector<Scalar> e;
    for (int n = 0; n <= 6; ++n) e.push_back(Scalar::pow10(-(1L << n), ctx.bits()));
    for (int k = 0; k < 5; ++k) e.push_back(Scalar::pow10(-115, ctx.bits()));
    e.push_back(Scalar(0));
    const OrderEstimate est = estimate_order(e, ctx);
    CHECK(close(est.q, Scalar(2), ctx.eps(20)));
    CHECK(est.last == 6);
}

TEST_CASE("order estimation needs enough usable data") {
    const PrecisionContext ctx(120);
    std::vector<Scalar> three{Scalar(1), ctx.ratio(1, 10), ctx.ratio(1, 100), Scalar::pow10(-118, ctx.bits())};
    CHECK_THROWS_AS(estimate_order(three, ctx), InsufficientDataError);
    std::vector<Scalar> flat(6, ctx.ratio(1, 10));
    CHECK_THROWS_AS(estimate_order(flat, ctx), InsufficientDataError);
    CHECK_THROWS_AS(estimate_linear_rate(std::vector<Scalar>{Scalar(1), Scalar(0)}, ctx), InsufficientDataError);
}

TEST_CASE("order is invariant under scaling a linear sequence") {
    const PrecisionContext ctx(120);
    std::mt19937_64 rng(89);
    for (int k = 0; k < 20; ++k) {
        const Scalar r = uniform(rng, 0.1, 0.9, ctx);
        const Scalar s = uniform(rng, 0.01, 100, ctx);
        const auto base = geometric(Scalar(1), r, 25);
        std::vector<Scalar> scaled;
        for (const auto& v : base) scaled.push_back(s * v);
        const OrderEstimate a = estimate_order(base, ctx);
        const OrderEstimate b = estimate_order(scaled, ctx);
        CHECK(close(a.q, b.q, ctx.eps(20)));
        CHECK(close(b.q, Scalar(1), ctx.eps(20)));
    }
}

TEST_CASE("linear rate estimates") {
    const PrecisionContext ctx(120);
    CHECK(close(estimate_linear_rate(geometric(Scalar(1), ctx.ratio(1, 2), 20), ctx), ctx.ratio(1, 2), ctx.eps(20)));
    std::mt19937_64 rng(97);
    for (int k = 0; k < 20; ++k) {
        const Scalar c = uniform(rng, 0.001, 1000, ctx);
        const Scalar r = uniform(rng, 0.05, 0.95, ctx);
        CHECK(close(estimate_linear_rate(geometric(c, r, 12), ctx), r, ctx.eps(20)));
    }
}

TEST_CASE("DR on circle/line from (0.9, 0.6) contracts at one half") {
    const PrecisionContext ctx(120);
    const Scalar half = ctx.ratio(1, 2);
    const DrOperator<Point2> op{horizontal_line_set(half), unit_circle_set()};
    const Point2 star{sqrt(ctx.num(3)) / 2, half};
    const auto trace = run(Method::dr, op, Point2{ctx.parse("0.9"), ctx.parse("0.6")}, StopRule::defaults(ctx), star, ctx);
    const Scalar rate = estimate_linear_rate(trace.errors, ctx);
    CHECK(abs(rate - half) <= Scalar(0.05));
}

TEST_CASE("performance profile of a two by two table") {
    const CostTable t{{"s1", "s2"}, {{1, 2}, {4, 2}}};
    const PerformanceProfile p = performance_profile(t, "iterations");
    CHECK(p.curves[0].rho(1) == 0.5);
    CHECK(p.curves[1].rho(1) == 0.5);
    CHECK(p.curves[0].rho(2) == 1.0);
    CHECK(p.curves[1].rho(2) == 1.0);
    CHECK(p.breakpoints() == std::vector<double>{1, 2});
}

TEST_CASE("performance profile with identical costs") {
    const CostTable t{{"a", "b", "c"}, {{3, 3, 3}, {7, 7, 7}}};
    const PerformanceProfile p = performance_profile(t, "iterations");
    for (const auto& c : p.curves) CHECK(c.rho(1) == 1.0);
}

TEST_CASE("a solver that always fails has a zero profile") {
    const CostTable t{{"ok", "broken"}, {{1, kFailedCost}, {5, kFailedCost}, {2, kFailedCost}}};
    const PerformanceProfile p = performance_profile(t, "iterations");
    for (double tau : {1.0, 10.0, 1e300}) CHECK(p.curves[1].rho(tau) == 0.0);
    CHECK(p.curves[0].rho(1) == 1.0);
}

TEST_CASE("problems nobody solved are excluded and reported") {
    const CostTable t{{"a", "b"}, {{1, 2}, {kFailedCost, kFailedCost}, {3, 3}}};
    const PerformanceProfile p = performance_profile(t, "iterations");
    CHECK(p.excluded == std::vector<std::size_t>{1});
    CHECK(p.curves[0].ratios.size() == 2);
    CHECK(p.curves[0].rho(1) == 1.0);
    CHECK(p.curves[1].rho(1) == 0.5);
    CHECK_THROWS_AS(performance_profile({{"a", "b"}, {{kFailedCost, kFailedCost}}}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(performance_profile({{"a"}, {{1}}}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(performance_profile({{"a", "b"}, {}}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(performance_profile({{"a", "b"}, {{1, 0}}}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(performance_profile({{"a", "b"}, {{1, 2, 3}}}, "x"), std::invalid_argument);
}

TEST_CASE("profile invariants on random cost tables") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> cost(1, 50);
    std::uniform_int_distribution<int> fail(0, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n_p = 1 + trial % 9;
        const std::size_t n_s = 2 + trial % 3;
        CostTable t;
        for (std::size_t s = 0; s < n_s; ++s) t.solvers.push_back("s" + std::to_string(s));
        for (std::size_t p = 0; p < n_p; ++p) {
            std::vector<double> row;
            for (std::size_t s = 0; s < n_s; ++s) row.push_back(fail(rng) == 0 ? kFailedCost : cost(rng));
            t.costs.push_back(row);
        }
        const bool any_solved = std::any_of(t.costs.begin(), t.costs.end(), [](const auto& row) {
            return std::any_of(row.begin(), row.end(), [](double c) { return c < kFailedCost; });
        });
        if (!any_solved) continue;
        const PerformanceProfile prof = performance_profile(t, "iterations");
        const auto taus = prof.breakpoints();
        const double tau_max = taus.back();
        for (std::size_t s = 0; s < n_s; ++s) {
            const auto& c = prof.curves[s];
            double prev = 0.0;
            for (double tau : taus) {
                const double r = c.rho(tau);
                CHECK(r >= prev);
                CHECK(r >= 0.0);
                CHECK(r <= 1.0);
                prev = r;
            }
            const auto solved = std::count_if(c.ratios.begin(), c.ratios.end(), [](double r) { return r < kFailedCost; });
            CHECK(c.rho(tau_max) == static_cast<double>(solved) / static_cast<double>(c.ratios.size()));
        }
        // Some solver attains the best cost on every retained problem.
        double best_at_one = 0.0;
        for (const auto& c : prof.curves) best_at_one += c.rho(1.0) * static_cast<double>(c.ratios.size());
        CHECK(best_at_one >= static_cast<double>(prof.curves[0].ratios.size()));

        // Relabeling problems changes nothing.
        CostTable shuffled = t;
        std::shuffle(shuffled.costs.begin(), shuffled.costs.end(), rng);
        const PerformanceProfile again = performance_profile(shuffled, "iterations");
        for (std::size_t s = 0; s < n_s; ++s) CHECK(again.curves[s].ratios == prof.curves[s].ratios);
    }
}

TEST_CASE("profile CSV layout") {
    const PerformanceProfile p = performance_profile({{"dr", "lt"}, {{4, 1}, {8, 2}}}, "iterations");
    std::ostringstream os;
    write_profile_csv(os, p, {{"problem", "circle-line"}});
    CHECK(os.str() ==
          "# problem: circle-line\n# metric: iterations\n# problems: 2\n# excluded: 0\n"
          "tau,rho_dr,rho_lt\n1,0,1\n4,1,1\n");
}

TEST_CASE("disk sampling") {
    const PrecisionContext ctx(120);
    const Point2 center{sqrt(ctx.num(3)) / 2, ctx.ratio(1, 2)};
    const Scalar radius = ctx.ratio(1, 2);
    const auto a = sample_disk(center, radius, 1000, 7, ctx);
    const auto b = sample_disk(center, radius, 1000, 7, ctx);
    const auto c = sample_disk(center, radius, 1000, 8, ctx);
    REQUIRE(a.points.size() == 1000);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
    int inner_half = 0;
    for (const auto& p : a.points) {
        CHECK(distance(p, center) <= radius);
        inner_half += distance(p, center) <= radius / sqrt(ctx.num(2));
    }
    // Area-correct sampling puts half the mass inside radius / sqrt(2).
    CHECK(inner_half >= 450);
    CHECK(inner_half <= 550);
    CHECK_THROWS_AS(sample_disk(center, Scalar(0), 3, 1, ctx), std::invalid_argument);
}

TEST_CASE("symmetric matrix sampling") {
    const PrecisionContext ctx(80);
    const auto a = sample_sym(4, 50, 3, ctx);
    const auto b = sample_sym(4, 50, 3, ctx);
    CHECK(a.points == b.points);
    for (const auto& m : a.points) {
        CHECK(m.matrix().is_symmetric());
        for (const auto& v : m.matrix().data()) CHECK(abs(v) <= 1);
    }
    CHECK_THROWS_AS(sample_sym(1, 1, 0, ctx), std::invalid_argument);
}

TEST_CASE("order estimate JSON record") {
    const PrecisionContext ctx(120);
    const auto est = estimate_order(geometric(Scalar(1), ctx.ratio(1, 4), 12), ctx);
    const auto rec = order_record("dr", "circle-line", est);
    CHECK(rec["method"] == "dr");
    CHECK(rec["problem"] == "circle-line");
    CHECK(rec["q"].get<std::string>().starts_with("1"));
    CHECK(rec["c"] == ctx.ratio(1, 4).to_string(30));
    CHECK(rec["window"].size() == 2);
    CHECK(rec.contains("residual"));
}
