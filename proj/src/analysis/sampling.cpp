#include "feasikit/analysis/sampling.hpp"

#include <stdexcept>

namespace feasikit {

Scalar uniform01(std::mt19937_64& rng, const PrecisionContext& ctx) {
    const auto top = static_cast<unsigned long>(rng() >> 11);
    return Scalar(top).with_bits(ctx.bits()) / (1L << 53);
}

TrialSet<Point2> sample_disk(const Point2& center, const Scalar& radius, std::size_t n, std::uint64_t seed,
                             const PrecisionContext& ctx) {
    if (!(radius > 0)) throw std::invalid_argument("sample_disk: radius must be positive");
    std::mt19937_64 rng(seed);
    TrialSet<Point2> out;
    out.seed = seed;
    const Scalar two_pi = 2 * ctx.pi();
    for (std::size_t k = 0; k < n; ++k) {
        const Scalar u = uniform01(rng, ctx);
        const Scalar v = uniform01(rng, ctx);
        out.points.push_back(center + Point2::polar(radius * sqrt(u), two_pi * v));
    }
    return out;
}

TrialSet<SymMatrix> sample_sym(std::size_t n_dim, std::size_t count, std::uint64_t seed, const PrecisionContext& ctx) {
    if (n_dim < 2) throw std::invalid_argument("sample_sym: n_dim must be >= 2");
    std::mt19937_64 rng(seed);
    TrialSet<SymMatrix> out;
    out.seed = seed;
    for (std::size_t k = 0; k < count; ++k) {
        Matrix u(n_dim);
        for (std::size_t i = 0; i < n_dim; ++i) {
            for (std::size_t j = 0; j < n_dim; ++j) u(i, j) = 2 * uniform01(rng, ctx) - 1;
        }
        SymMatrix m(n_dim);
        for (std::size_t i = 0; i < n_dim; ++i) {
            for (std::size_t j = i; j < n_dim; ++j) m.set(i, j, (u(i, j) + u(j, i)) / 2);
        }
        out.points.push_back(std::move(m));
    }
    return out;
}

}  // namespace feasikit
