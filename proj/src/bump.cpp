#include "zoll/bump.hpp"

#include <cmath>

namespace zoll::tiling {

namespace {

double decay(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = decay(t);
    const double b = decay(1.0 - t);
    return a / (a + b);
}

double lp_transition(double s) {
    // 1 on (-inf, 1], 0 on [2, inf).
    return 1.0 - smooth_step(s - 1.0);
}

SmoothBump make_lp_bump() {
    SmoothBump b;
    b.support_lo = 0.5;
    b.support_hi = 2.0;
    // beta(s) = zeta(s) - zeta(2s); sum_m beta(2^-m s) telescopes to 1 for s > 0.
    b.f = [](double s) { return lp_transition(s) - lp_transition(2.0 * s); };
    return b;
}

SmoothBump make_unit_partition() {
    SmoothBump b;
    b.support_lo = -1.0;
    b.support_hi = 1.0;
    // eta(tau) = Z(tau) - Z(tau - 1) with Z = smooth_step(tau + 1)
    // climbing 0 -> 1 on [-1, 0]; integer shifts telescope to 1.
    b.f = [](double tau) { return smooth_step(tau + 1.0) - smooth_step(tau); };
    return b;
}

}  // namespace zoll::tiling
