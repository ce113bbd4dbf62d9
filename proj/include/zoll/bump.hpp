#pragma once

#include <functional>

namespace zoll::tiling {

// Smooth compactly supported cutoff with exact zeros outside its support.
// Built from the exp(-1/t) transition, so all derivatives vanish at the
// seams and shifted/rescaled copies telescope to exact partitions of unity.
struct SmoothBump {
    std::function<double(double)> f;
    double support_lo = 0.0;
    double support_hi = 0.0;

    double operator()(double s) const {
        if (s <= support_lo || s >= support_hi) return 0.0;
        return f(s);
    }
};

// C-infinity step: 0 on (-inf, 0], 1 on [1, inf), strictly increasing between.
double smooth_step(double t);

// Littlewood-Paley generator beta, supported in (1/2, 2), with
// sum_m beta(2^-m s) = 1 for every s > 0 (telescoping by construction).
SmoothBump make_lp_bump();

// Unit-step generator eta, supported in (-1, 1), with
// sum_j eta(tau - j) = 1 for every tau.
SmoothBump make_unit_partition();

// The smooth transition zeta used by make_lp_bump: 1 on (-inf, 1], 0 on
// [2, inf). Exposed for the telescoping tests.
double lp_transition(double s);

}  // namespace zoll::tiling
