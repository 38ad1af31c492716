#include "feasikit/analysis/profile.hpp"

#include "feasikit/solvers/trace_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace feasikit {

double ProfileCurve::rho(double tau) const {
    if (ratios.empty()) return 0.0;
    const auto hit = std::upper_bound(ratios.begin(), ratios.end(), tau) - ratios.begin();
    return static_cast<double>(hit) / static_cast<double>(ratios.size());
}

std::vector<double> PerformanceProfile::breakpoints() const {
    std::vector<double> taus{1.0};
    for (const auto& c : curves) {
        for (double r : c.ratios) {
            if (std::isfinite(r)) taus.push_back(r);
        }
    }
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    return taus;
}

PerformanceProfile performance_profile(const CostTable& table, std::string metric) {
    const std::size_t n_s = table.solvers.size();
    if (n_s < 2) throw std::invalid_argument("performance profile needs at least two solvers");
    if (table.costs.empty()) throw std::invalid_argument("performance profile needs at least one problem");

    PerformanceProfile out;
    out.metric = std::move(metric);
    for (const auto& name : table.solvers) out.curves.push_back({name, {}});

    for (std::size_t p = 0; p < table.costs.size(); ++p) {
        const auto& row = table.costs[p];
        if (row.size() != n_s) throw std::invalid_argument("cost table row " + std::to_string(p) + " has the wrong width");
        double best = kFailedCost;
        for (double c : row) {
            if (std::isnan(c) || c <= 0.0) throw std::invalid_argument("costs must be positive or kFailedCost");
            best = std::min(best, c);
        }
        if (!std::isfinite(best)) {
            out.excluded.push_back(p);
            continue;
        }
        for (std::size_t s = 0; s < n_s; ++s) {
            out.curves[s].ratios.push_back(std::isfinite(row[s]) ? row[s] / best : kFailedCost);
        }
    }
    if (out.curves.front().ratios.empty()) throw std::invalid_argument("every problem failed for every solver");
    for (auto& c : out.curves) std::sort(c.ratios.begin(), c.ratios.end());
    return out;
}

void write_profile_csv(std::ostream& os, const PerformanceProfile& profile,
                       const std::vector<std::pair<std::string, std::string>>& meta) {
    Metadata all = meta;
    all.emplace_back("metric", profile.metric);
    all.emplace_back("problems", std::to_string(profile.curves.front().ratios.size()));
    all.emplace_back("excluded", std::to_string(profile.excluded.size()));
    write_metadata(os, all);
    os << "tau";
    for (const auto& c : profile.curves) os << ",rho_" << c.solver;
    os << '\n';
    char buf[40];
    for (double tau : profile.breakpoints()) {
        std::snprintf(buf, sizeof buf, "%.17g", tau);
        os << buf;
        for (const auto& c : profile.curves) {
            std::snprintf(buf, sizeof buf, "%.17g", c.rho(tau));
            os << ',' << buf;
        }
        os << '\n';
    }
}

}  // namespace feasikit
