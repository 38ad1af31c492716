#include "feasikit/analysis/convergence.hpp"

#include <algorithm>
#include <string>

namespace feasikit {

namespace {

struct Window {
    std::size_t first;
    std::size_t last;
};

Window tail_window(std::span<const Scalar> errors, std::size_t min_entries, const PrecisionContext& ctx) {
    const Scalar floor = ctx.eps(10);
    auto usable = [&](std::size_t i) { return errors[i].is_finite() && errors[i] > floor; };

    std::size_t count = 0;
    for (std::size_t i = 0; i < errors.size(); ++i) count += usable(i) ? 1 : 0;
    if (count < min_entries) {
        throw InsufficientDataError("need " + std::to_string(min_entries) + " error entries above the precision floor, got " +
                                    std::to_string(count));
    }

    // Last run of consecutive usable entries.
    std::size_t end = errors.size();
    while (end > 0 && !usable(end - 1)) --end;
    std::size_t begin = end - 1;
    while (begin > 0 && usable(begin - 1)) --begin;
    const std::size_t pairs = end - begin - 1;
    if (pairs + 1 < min_entries) {
        throw InsufficientDataError("the last run of usable errors has only " + std::to_string(pairs + 1) + " entries");
    }
    const std::size_t take = std::min(pairs, std::max<std::size_t>(4, (pairs + 1) / 2));
    return {end - 1 - take, end - 1};
}

}  // namespace

OrderEstimate estimate_order(std::span<const Scalar> errors, const PrecisionContext& ctx) {
    const Window w = tail_window(errors, 4, ctx);
    const std::size_t m = w.last - w.first;
    std::vector<Scalar> xs;
    std::vector<Scalar> ys;
    Scalar sx = Scalar::zero(ctx.bits());
    Scalar sy = sx;
    for (std::size_t i = w.first; i < w.last; ++i) {
        xs.push_back(log(errors[i].with_bits(ctx.bits())));
        ys.push_back(log(errors[i + 1].with_bits(ctx.bits())));
        sx += xs.back();
        sy += ys.back();
    }
    const Scalar mx = sx / static_cast<long>(m);
    const Scalar my = sy / static_cast<long>(m);
    Scalar sxx = Scalar::zero(ctx.bits());
    Scalar sxy = sxx;
    for (std::size_t k = 0; k < m; ++k) {
        sxx += square(xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
    }
    if (sxx <= ctx.eps(10) * max(Scalar(1), square(mx))) throw InsufficientDataError("errors do not change across the window");
    const Scalar q = sxy / sxx;
    const Scalar log_c = my - q * mx;
    Scalar ss = Scalar::zero(ctx.bits());
    for (std::size_t k = 0; k < m; ++k) ss += square(ys[k] - q * xs[k] - log_c);
    return {q, exp(log_c), w.first, w.last, sqrt(ss / static_cast<long>(m))};
}

Scalar estimate_linear_rate(std::span<const Scalar> errors, const PrecisionContext& ctx) {
    const Window w = tail_window(errors, 3, ctx);
    const auto m = static_cast<long>(w.last - w.first);
    const Scalar ratio = errors[w.last].with_bits(ctx.bits()) / errors[w.first];
    return exp(log(ratio) / m);
}

}  // namespace feasikit
