#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "core/frint.hpp"
#include "core/surface.hpp"
#include "core/variation.hpp"

using namespace fracdim;

static const Domain kUnit{0, 1, 0, 1};

static SampledSurface plane(int nx, int ny) {
    std::vector<double> v(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            v[static_cast<std::size_t>(j) * nx + i] = i / double(nx - 1) + j / double(ny - 1);
    return SampledSurface(kUnit, {nx, ny}, std::move(v));
}

static SampledSurface random_surface(std::mt19937& rng, int nx, int ny) {
    std::vector<double> v(static_cast<std::size_t>(nx) * ny);
    for (double& t : v) t = -1.0 + 2.0 * (rng() * (1.0 / 4294967296.0));
    return SampledSurface(kUnit, {nx, ny}, std::move(v));
}

static double harmonic(int n) {
    double h = 0.0;
    for (int t = 1; t <= n; ++t) h += 1.0 / t;
    return h;
}

TEST_CASE("line variation examples") {
    const SampledSurface c = sample(Constant{8}, kUnit, {9, 9});
    CHECK(line_variation(c, Axis::x, 4) == 0.0);
    CHECK(line_variation(c, Axis::y, 0) == 0.0);

    const SampledSurface p = plane(33, 17);
    for (int j : {0, 8, 16}) CHECK(line_variation(p, Axis::x, j) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(line_variation(p, Axis::x, 17), error);
    CHECK_THROWS_AS(line_variation(p, Axis::y, -1), error);
    CHECK_THROWS_AS(line_variation(p, Axis::x, 0, 5, 3), error);
    CHECK_THROWS_AS(line_variation(p, Axis::x, 0, 0, 40), error);
}

TEST_CASE("line variation of the rough gallery surface along its worst row") {
    // 4097 nodes resolve the dips of pieces 1..10 exactly; over [0, a_4] the
    // per-piece dip-and-return contributes 0.125/n.
    const SampledSurface m = sample(UVFunctionM{}, kUnit, {4097, 3});
    const int idx_a4 = 4097 - 1 - 256;  // a_4 = 1 - 2^-4, grid step 2^-12
    CHECK(line_variation(m, Axis::x, 2, 0, idx_a4) == doctest::Approx(0.125 * harmonic(4)).epsilon(1e-13));
    CHECK(line_variation(m, Axis::x, 2, 0, idx_a4) == doctest::Approx(0.2604167).epsilon(1e-6));
    // full-line variation exceeds any truncation
    CHECK(line_variation(m, Axis::x, 2) >= 0.125 * harmonic(10) - 1e-9);
}

TEST_CASE("chain lower bound: constant and bimonotone surfaces") {
    CHECK(arzela_variation_lb(sample(Constant{3}, kUnit, {17, 17})) == 0.0);
    for (auto [nx, ny] : {std::pair{5, 5}, {9, 65}, {33, 33}, {90, 90}, {7, 11}})
        CHECK(arzela_variation_lb(plane(nx, ny)) == 2.0);
}

TEST_CASE("chain lower bound equals corner gap for random bimonotone surfaces") {
    std::mt19937 rng(21u);
    for (int trial = 0; trial < 5; ++trial) {
        const int nx = 5 + int(rng() % 20), ny = 5 + int(rng() % 20);
        // cumulative sums of nonnegative increments are bimonotone
        std::vector<double> rowinc(static_cast<std::size_t>(nx)), colinc(static_cast<std::size_t>(ny));
        for (double& t : rowinc) t = rng() * (1.0 / 4294967296.0);
        for (double& t : colinc) t = rng() * (1.0 / 4294967296.0);
        std::vector<double> v(static_cast<std::size_t>(nx) * ny);
        double cy = 0.0;
        for (int j = 0; j < ny; ++j) {
            cy += colinc[static_cast<std::size_t>(j)];
            double cx = 0.0;
            for (int i = 0; i < nx; ++i) {
                cx += rowinc[static_cast<std::size_t>(i)];
                v[static_cast<std::size_t>(j) * nx + i] = cx + cy;
            }
        }
        const SampledSurface f(kUnit, {nx, ny}, std::move(v));
        REQUIRE(is_bimonotone(f));
        const double want = f.at(nx - 1, ny - 1) - f.at(0, 0);
        CHECK(arzela_variation_lb(f) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("chain lower bound dominates every single-line variation") {
    std::mt19937 rng(22u);
    for (int trial = 0; trial < 4; ++trial) {
        const SampledSurface f = random_surface(rng, 13, 11);
        const double lb = arzela_variation_lb(f);
        for (int j = 0; j < 11; ++j) CHECK(lb >= line_variation(f, Axis::x, j) - 1e-12);
        for (int i = 0; i < 13; ++i) CHECK(lb >= line_variation(f, Axis::y, i) - 1e-12);
    }
}

TEST_CASE("chain lower bound never drops under refinement") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 3; ++trial) {
        const SampledSurface fine = random_surface(rng, 33, 17);
        // coarse grids are stride-2 and stride-4 subsamples of the fine one
        auto subsample = [&](int stride) {
            const int cnx = (33 - 1) / stride + 1, cny = (17 - 1) / stride + 1;
            std::vector<double> v(static_cast<std::size_t>(cnx) * cny);
            for (int j = 0; j < cny; ++j)
                for (int i = 0; i < cnx; ++i)
                    v[static_cast<std::size_t>(j) * cnx + i] = fine.at(i * stride, j * stride);
            return SampledSurface(kUnit, {cnx, cny}, std::move(v));
        };
        const double v4 = arzela_variation_lb(subsample(4));
        const double v2 = arzela_variation_lb(subsample(2));
        const double v1 = arzela_variation_lb(fine);
        CHECK(v4 <= v2 + 1e-12);
        CHECK(v2 <= v1 + 1e-12);
    }
}

TEST_CASE("chain search guard") {
    CHECK_THROWS_AS(arzela_variation_lb(sample(Constant{1}, kUnit, {129, 65})), error);
    try {
        arzela_variation_lb(sample(Constant{1}, kUnit, {129, 65}));
    } catch (const error& e) {
        CHECK(e.code() == errc::guard_error);
    }
    CHECK_NOTHROW(arzela_variation_lb(sample(Constant{1}, kUnit, {128, 64})));
}

TEST_CASE("divergence witness: chain bound tracks the harmonic sum") {
    double prev = 0.0;
    for (int n : {2, 4, 6, 8}) {
        const int nx = (1 << (n + 1)) + 1;
        const SampledSurface m = sample(UVFunctionM{}, kUnit, {nx, 9});
        const double lb = arzela_variation_lb(m);
        CHECK(lb >= 0.125 * harmonic(n) - 1e-9);
        CHECK(lb >= prev);
        prev = lb;
    }
    // the bimonotone control stays flat across the same refinement ladder
    for (int n : {2, 4, 6, 8}) CHECK(arzela_variation_lb(plane((1 << (n + 1)) + 1, 9)) == 2.0);
}

TEST_CASE("fractional integration regularizes the divergent surface") {
    std::vector<double> raw, smoothed;
    for (int n : {2, 4, 6, 8}) {
        const int nx = (1 << (n + 1)) + 1;
        const SampledSurface m = sample(UVFunctionM{}, kUnit, {nx, 9});
        raw.push_back(arzela_variation_lb(m));
        smoothed.push_back(arzela_variation_lb(mixed_rl_integral(m, {0.5, 0.5}).surface));
    }
    const double raw_growth = (raw[3] - raw[2]) / raw[2];
    const double smooth_growth = (smoothed[3] - smoothed[2]) / smoothed[2];
    CHECK(raw_growth >= 0.05);
    CHECK(smooth_growth <= 0.01);
}

TEST_CASE("bimonotone check examples") {
    CHECK(is_bimonotone(plane(17, 17)));
    CHECK(is_bimonotone(sample(Constant{2}, kUnit, {9, 9})));
    CHECK(is_bimonotone(sample(Monomial{2, 1}, kUnit, {17, 17})));
    CHECK_FALSE(is_bimonotone(sample(UVFunctionM{}, kUnit, {129, 9})));
    CHECK_FALSE(is_bimonotone(sample(SeparableSine{6.2831853, 6.2831853}, kUnit, {33, 33})));

    std::vector<double> negx(9 * 9);
    for (int j = 0; j < 9; ++j)
        for (int i = 0; i < 9; ++i) negx[static_cast<std::size_t>(j) * 9 + i] = -(i / 8.0);
    CHECK_FALSE(is_bimonotone(SampledSurface(kUnit, {9, 9}, std::move(negx))));
}
