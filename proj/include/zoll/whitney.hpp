#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace zoll::tiling {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

using CubeIndex = std::array<std::int64_t, 2>;

// Outcome of locating a pair of points in the Whitney decomposition of the
// off-diagonal: either the unique triple (scale exponent m, cube, cube) of
// close cubes, or Residual for near-diagonal pairs that stay adjacent at the
// base scale.
struct WhitneyResult {
    bool residual = true;
    int scale_exponent = 0;  // theta = 2^m * theta0
    CubeIndex cube1{0, 0};
    CubeIndex cube2{0, 0};
};

// Dyadic cube index of p at scale theta = 2^m * theta0 (cubes are translates
// of [0, theta)^2 on the lattice theta * Z^2, nested across scales).
CubeIndex cube_at_scale(const Point2& p, double theta0, int m);

// Chebyshev distance of cube indices; cubes are adjacent iff it is <= 1.
std::int64_t index_distance(const CubeIndex& a, const CubeIndex& b);

// Two cubes at a common scale are "close" if they are not adjacent but their
// parents are adjacent.
bool cubes_close(const CubeIndex& a, const CubeIndex& b);

// Walk scales m = 0, 1, 2, ... until the close condition holds; Residual if
// the base-scale cubes are already adjacent (then no coarser scale can be
// close).
WhitneyResult whitney_locate(const Point2& p1, const Point2& p2, double theta0);

// Number of scales m in [0, m_max] at which the cubes of p1, p2 are close.
// The uniqueness claim says this is exactly 1 for every non-Residual pair.
int count_close_scales(const Point2& p1, const Point2& p2, double theta0, int m_max);

// Euclidean distance between the closed cubes [i*theta,(i+1)*theta]^2.
double cube_distance(const CubeIndex& a, const CubeIndex& b, double theta);

}  // namespace zoll::tiling
