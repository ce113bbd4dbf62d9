#include "zoll/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zoll::tiling {

namespace {

std::int64_t floor_div(std::int64_t a, int shift) {
    // arithmetic shift = floor division by 2^shift, also for negatives
    return a >> shift;
}

CubeIndex base_index(const Point2& p, double theta0) {
    return {static_cast<std::int64_t>(std::floor(p.x / theta0)),
            static_cast<std::int64_t>(std::floor(p.y / theta0))};
}

}  // namespace

CubeIndex cube_at_scale(const Point2& p, double theta0, int m) {
    if (!(theta0 > 0.0)) throw std::invalid_argument("whitney: theta0 must be positive");
    // Derived from the base-scale index by shifting, so cubes are nested
    // across scales by construction.
    const CubeIndex b = base_index(p, theta0);
    return {floor_div(b[0], m), floor_div(b[1], m)};
}

std::int64_t index_distance(const CubeIndex& a, const CubeIndex& b) {
    return std::max(std::llabs(a[0] - b[0]), std::llabs(a[1] - b[1]));
}

bool cubes_close(const CubeIndex& a, const CubeIndex& b) {
    if (index_distance(a, b) <= 1) return false;
    const CubeIndex pa{floor_div(a[0], 1), floor_div(a[1], 1)};
    const CubeIndex pb{floor_div(b[0], 1), floor_div(b[1], 1)};
    return index_distance(pa, pb) <= 1;
}

WhitneyResult whitney_locate(const Point2& p1, const Point2& p2, double theta0) {
    if (!(theta0 > 0.0)) throw std::invalid_argument("whitney: theta0 must be positive");
    CubeIndex a = base_index(p1, theta0);
    CubeIndex b = base_index(p2, theta0);
    WhitneyResult r;
    // Once adjacent, cubes stay adjacent (or merge) at every coarser scale,
    // so an adjacent base pair can never become close.
    for (int m = 0; index_distance(a, b) > 1; ++m) {
        if (cubes_close(a, b)) {
            r.residual = false;
            r.scale_exponent = m;
            r.cube1 = a;
            r.cube2 = b;
            return r;
        }
        a = {floor_div(a[0], 1), floor_div(a[1], 1)};
        b = {floor_div(b[0], 1), floor_div(b[1], 1)};
    }
    return r;
}

int count_close_scales(const Point2& p1, const Point2& p2, double theta0, int m_max) {
    CubeIndex a = base_index(p1, theta0);
    CubeIndex b = base_index(p2, theta0);
    int n = 0;
    for (int m = 0; m <= m_max; ++m) {
        if (cubes_close(a, b)) ++n;
        a = {floor_div(a[0], 1), floor_div(a[1], 1)};
        b = {floor_div(b[0], 1), floor_div(b[1], 1)};
    }
    return n;
}

double cube_distance(const CubeIndex& a, const CubeIndex& b, double theta) {
    const auto gap = [theta](std::int64_t i, std::int64_t j) {
        const std::int64_t d = std::llabs(i - j);
        return d <= 1 ? 0.0 : theta * static_cast<double>(d - 1);
    };
    const double gx = gap(a[0], b[0]);
    const double gy = gap(a[1], b[1]);
    return std::hypot(gx, gy);
}

}  // namespace zoll::tiling
