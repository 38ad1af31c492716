#pragma once

#include "feasikit/numerics/matrix.hpp"
#include "feasikit/numerics/point2.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace feasikit {

/// Seeded starting points for one problem.
template <typename P>
struct TrialSet {
    std::uint64_t seed = 0;
    std::string problem;
    std::vector<P> points;
};

/// Uniform draw from [0, 1) built from the top 53 bits of one engine output,
/// so the sequence does not depend on the standard library's distributions.
Scalar uniform01(std::mt19937_64& rng, const PrecisionContext& ctx);

/// Uniform on the closed disk: r = radius sqrt(u), theta = 2 pi v.
/// Throws std::invalid_argument unless radius > 0.
TrialSet<Point2> sample_disk(const Point2& center, const Scalar& radius, std::size_t n, std::uint64_t seed,
                             const PrecisionContext& ctx);

/// (U + U^T) / 2 with U entrywise uniform on [-1, 1]. Throws unless n_dim >= 2.
TrialSet<SymMatrix> sample_sym(std::size_t n_dim, std::size_t count, std::uint64_t seed, const PrecisionContext& ctx);

}  // namespace feasikit
