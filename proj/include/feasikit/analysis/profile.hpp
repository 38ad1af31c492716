#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace feasikit {

/// Cost of a failed run.
inline constexpr double kFailedCost = std::numeric_limits<double>::infinity();

/// costs[p][s]: cost of solver s on problem p, or kFailedCost. Finite costs must be positive.
struct CostTable {
    std::vector<std::string> solvers;
    std::vector<std::vector<double>> costs;
};

/// rho_s(tau): fraction of problems with performance ratio r_{p,s} <= tau.
struct ProfileCurve {
    std::string solver;
    /// r_{p,s} for every retained problem, ascending; failures are +inf.
    std::vector<double> ratios;

    [[nodiscard]] double rho(double tau) const;
};

struct PerformanceProfile {
    std::string metric;
    std::vector<ProfileCurve> curves;
    /// Problems every solver failed on; left out of every curve.
    std::vector<std::size_t> excluded;

    /// Distinct finite ratios over all solvers, ascending; always starts at 1.
    [[nodiscard]] std::vector<double> breakpoints() const;
};

/// Dolan-More profile. Throws std::invalid_argument without at least one
/// problem and two solvers, on a ragged table, on a non-positive cost, or
/// when every problem is excluded.
PerformanceProfile performance_profile(const CostTable& table, std::string metric);

/// `tau,rho_<solver>...` at every breakpoint, after a `#` metadata block.
void write_profile_csv(std::ostream& os, const PerformanceProfile& profile,
                       const std::vector<std::pair<std::string, std::string>>& meta);

}  // namespace feasikit
