#include "feasikit/numerics/errors.hpp"
#include "feasikit/numerics/matrix.hpp"
#include "feasikit/numerics/point2.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace feasikit;
using namespace testing_support;


TEST_CASE("precision context derives its tolerances from the digit count") {
    const PrecisionContext ctx(50);
    CHECK(ctx.digits() == 50);
    CHECK(ctx.eig_tol() == Scalar::pow10(-40, ctx.bits()));
    CHECK(ctx.col_tol() == Scalar::pow10(-40, ctx.bits()));
    CHECK(ctx.eps(20) == Scalar::pow10(-30, ctx.bits()));
    CHECK(ctx.bits() >= 50 * 3.3219);
    CHECK_THROWS_AS(PrecisionContext(29), std::invalid_argument);
    CHECK(PrecisionContext().digits() == 120);
}

TEST_CASE("FEASIKIT_PRECISION overrides the default digit count") {
    ::setenv("FEASIKIT_PRECISION", "64", 1);
    CHECK(PrecisionContext::default_digits_from_env() == 64);
    ::setenv("FEASIKIT_PRECISION", "sixty", 1);
    CHECK_THROWS_AS(PrecisionContext::default_digits_from_env(), std::invalid_argument);
    ::unsetenv("FEASIKIT_PRECISION");
    CHECK(PrecisionContext::default_digits_from_env() == 120);
}

TEST_CASE("scalars carry their own precision") {
    const PrecisionContext lo(30);
    const PrecisionContext hi(120);
    const Scalar third_lo = lo.ratio(1, 3);
    const Scalar third_hi = hi.ratio(1, 3);
    CHECK(third_lo.bits() < third_hi.bits());
    CHECK((third_lo + third_hi).bits() == third_hi.bits());
    CHECK(abs(third_hi * 3 - 1) <= hi.eps(1));
    CHECK(abs(third_lo - third_hi) > hi.eps(1));
}

TEST_CASE("scalar decimal round trip at full precision") {
    const PrecisionContext ctx(120);
    const Scalar root2 = sqrt(ctx.num(2));
    const Scalar back = ctx.parse(root2.to_string());
    CHECK(abs(back - root2) <= ctx.eps(0));
    CHECK(ctx.parse("1.5e-3").to_string(30) == "1.5e-3");
    CHECK(ctx.num(-250).to_string() == "-2.5e2");
    CHECK(Scalar(0).to_string() == "0");
    CHECK(Scalar::infinity().to_string() == "inf");
    CHECK_THROWS_AS(static_cast<void>(ctx.parse("1.2.3")), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(ctx.parse("")), std::invalid_argument);
}

TEST_CASE("point polar accessors") {
    const PrecisionContext ctx(60);
    const Point2 p{ctx.num(-3), ctx.num(-4)};
    CHECK(p.radius() == 5);
    const Scalar theta = p.angle();
    CHECK(theta >= 0);
    CHECK(theta < 2 * ctx.pi());
    const Point2 q = Point2::polar(p.radius(), theta);
    CHECK(distance(p, q) <= ctx.eps(5));
}

TEST_CASE("eig_sym on a diagonal matrix permutes the identity") {
    const PrecisionContext ctx(120);
    const SymMatrix x{{2, 0}, {0, -1}};
    const Spectrum s = eig_sym(x, ctx);
    CHECK(s.eigenvalues[0] == -1);
    CHECK(s.eigenvalues[1] == 2);
    CHECK(s.basis == Matrix{{0, 1}, {1, 0}});
}

TEST_CASE("eig_sym on the 2x2 exchange matrix") {
    const PrecisionContext ctx(120);
    const SymMatrix x{{0, 1}, {1, 0}};
    const Spectrum s = eig_sym(x, ctx);
    const Scalar tol = 10 * ctx.eig_tol();
    CHECK(close(s.eigenvalues[0], Scalar(-1), tol));
    CHECK(close(s.eigenvalues[1], Scalar(1), tol));
    const Scalar r = 1 / sqrt(ctx.num(2));
    // Largest-magnitude component positive; first index on ties.
    CHECK(close(s.basis(0, 0), r, tol));
    CHECK(close(s.basis(1, 0), -r, tol));
    CHECK(close(s.basis(0, 1), r, tol));
    CHECK(close(s.basis(1, 1), r, tol));
}

TEST_CASE("eig_sym on the identity") {
    const PrecisionContext ctx(120);
    const Spectrum s = eig_sym(SymMatrix::identity(3), ctx);
    for (const auto& l : s.eigenvalues) CHECK(l == 1);
    CHECK(s.basis == Matrix::identity(3));
}

TEST_CASE("eig_sym residuals on random symmetric matrices") {
    const PrecisionContext ctx(120);
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            const SymMatrix x = random_sym(rng, n, 3.0, ctx);
            const Spectrum s = eig_sym(x, ctx);
            CHECK(orthogonality_residual(s.basis) <= 10 * ctx.eig_tol());
            CHECK(reconstruction_residual(x, s) <= 10 * ctx.eig_tol() * max(Scalar(1), norm(x)));
            for (std::size_t k = 1; k < n; ++k) CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
        }
    }
}

TEST_CASE("eig_sym is deterministic") {
    const PrecisionContext ctx(80);
    std::mt19937_64 rng(5);
    const SymMatrix x = random_sym(rng, 4, 1.0, ctx);
    const Spectrum a = eig_sym(x, ctx);
    const Spectrum b = eig_sym(x, ctx);
    CHECK(a.basis == b.basis);
    CHECK(a.eigenvalues == b.eigenvalues);
}

TEST_CASE("SymMatrix rejects asymmetric input") {
    CHECK_THROWS_AS(SymMatrix(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
    SymMatrix m(2);
    m.set(0, 1, Scalar(5));
    CHECK(m(1, 0) == 5);
}

TEST_CASE("Frobenius inner product counts off-diagonal entries twice") {
    const SymMatrix a{{1, 2}, {2, 3}};
    const SymMatrix b{{4, 5}, {5, 6}};
    CHECK(inner(a, b) == 4 + 2 * 10 + 18);
}

TEST_CASE("solve2x2 examples") {
    const PrecisionContext ctx(120);
    const Vec2 id = solve2x2(Mat2{{{1, 0}, {0, 1}}}, Vec2{3, 4}, ctx);
    CHECK(id[0] == 3);
    CHECK(id[1] == 4);

    const Mat2 a{{{ctx.ratio(1, 2), ctx.ratio(3, 4)}, {ctx.ratio(1, 4), ctx.ratio(1, 2)}}};
    const Vec2 mu = solve2x2(a, Vec2{ctx.ratio(1, 2), ctx.ratio(1, 2)}, ctx);
    CHECK(close(mu[0], Scalar(-2), ctx.eps(15)));
    CHECK(close(mu[1], Scalar(2), ctx.eps(15)));

    try {
        solve2x2(Mat2{{{1, 1}, {1, 1}}}, Vec2{1, 2}, ctx);
        FAIL("expected a singular system");
    } catch (const SingularMatrixError& e) {
        CHECK(e.determinant().is_zero());
    }
}

TEST_CASE("solve2x2 residual bound on random well-conditioned systems") {
    const PrecisionContext ctx(120);
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 1000) {
        const Mat2 a{{{uniform(rng, -1, 1, ctx), uniform(rng, -1, 1, ctx)},
                      {uniform(rng, -1, 1, ctx), uniform(rng, -1, 1, ctx)}}};
        const Scalar det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if (abs(det) < Scalar(0.1)) continue;
        const Vec2 b{uniform(rng, -5, 5, ctx), uniform(rng, -5, 5, ctx)};
        const Vec2 x = solve2x2(a, b, ctx);
        const Scalar r0 = a[0][0] * x[0] + a[0][1] * x[1] - b[0];
        const Scalar r1 = a[1][0] * x[0] + a[1][1] * x[1] - b[1];
        const Scalar a_norm = sqrt(square(a[0][0]) + square(a[0][1]) + square(a[1][0]) + square(a[1][1]));
        const Scalar bound = ctx.eps(15) * (a_norm * hypot(x[0], x[1]) + hypot(b[0], b[1]));
        CHECK(hypot(r0, r1) <= bound);
        ++checked;
    }
}
