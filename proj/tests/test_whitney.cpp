#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zoll/whitney.hpp"

using namespace zoll::tiling;

TEST_CASE("cube indexing and nesting") {
    const double theta0 = 0.25;
    const Point2 p{0.8, -0.3};
    const auto c0 = cube_at_scale(p, theta0, 0);
    CHECK(c0[0] == 3);   // 0.8 / 0.25
    CHECK(c0[1] == -2);  // -0.3 / 0.25 floors to -2
    // parents nest: index at scale m+1 is floor of half the index at scale m
    for (int m = 0; m < 20; ++m) {
        const auto child = cube_at_scale(p, theta0, m);
        const auto parent = cube_at_scale(p, theta0, m + 1);
        for (int c = 0; c < 2; ++c) {
            CHECK(parent[c] == (child[c] >= 0 ? child[c] / 2 : (child[c] - 1) / 2));
        }
    }
}

TEST_CASE("close condition basics") {
    CHECK(index_distance({0, 0}, {3, 0}) == 3);
    CHECK(index_distance({0, 0}, {1, 1}) == 1);
    CHECK(index_distance({-2, 5}, {1, 4}) == 3);
    // non-adjacent with adjacent parents
    CHECK(cubes_close({0, 0}, {3, 0}));
    CHECK_FALSE(cubes_close({0, 0}, {1, 0}));  // adjacent
    CHECK_FALSE(cubes_close({0, 0}, {8, 0}));  // parents not adjacent
}

TEST_CASE("locate examples") {
    const double theta0 = 0.125;
    // same point: Residual at every scale
    const Point2 p{0.3, 0.44};
    CHECK(whitney_locate(p, p, theta0).residual);

    // the worked example: offset (3.5, 0.5) in units of theta0
    const Point2 a{0.0, 0.0};
    const Point2 b{3.5 * theta0, 0.5 * theta0};
    const auto res = whitney_locate(a, b, theta0);
    REQUIRE_FALSE(res.residual);
    CHECK(res.scale_exponent == 0);
    CHECK(res.cube1 == CubeIndex{0, 0});
    CHECK(res.cube2 == CubeIndex{3, 0});
}

TEST_CASE("uniqueness of the close scale, 1e4 separated pairs") {
    const double theta0 = 1.0 / 64.0;
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const int m_max = 16;
    int found = 0;
    while (found < 10000) {
        const Point2 p1{unif(rng), unif(rng)};
        const Point2 p2{unif(rng), unif(rng)};
        const double sep = std::hypot(p1.x - p2.x, p1.y - p2.y);
        if (sep <= 4.0 * theta0) continue;
        ++found;
        const auto res = whitney_locate(p1, p2, theta0);
        REQUIRE_FALSE(res.residual);
        // scan every scale, not just the first hit
        REQUIRE(count_close_scales(p1, p2, theta0, m_max) == 1);
        // distance consistency at the located scale
        const double theta = theta0 * std::ldexp(1.0, res.scale_exponent);
        const double d = cube_distance(res.cube1, res.cube2, theta);
        REQUIRE(d >= theta);
        REQUIRE(d <= 8.0 * theta);
    }
}

TEST_CASE("residual pairs are near-diagonal") {
    const double theta0 = 1.0 / 32.0;
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int residuals = 0;
    for (int i = 0; i < 20000; ++i) {
        const Point2 p1{unif(rng), unif(rng)};
        const Point2 p2{p1.x + (unif(rng) - 0.5) * 8.0 * theta0,
                        p1.y + (unif(rng) - 0.5) * 8.0 * theta0};
        const auto res = whitney_locate(p1, p2, theta0);
        if (res.residual) {
            ++residuals;
            const double sep = std::hypot(p1.x - p2.x, p1.y - p2.y);
            REQUIRE(sep <= 4.0 * theta0);
        }
    }
    CHECK(residuals > 0);  // the sample actually exercised the branch
}
