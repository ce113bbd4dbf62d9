#include "zoll/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zoll::exponents {

namespace {

void check_dim(int d) {
    if (d < 2) throw std::invalid_argument("exponents: dimension must be >= 2");
}

void check_q(double q) {
    if (!(q >= 2.0)) throw std::invalid_argument("exponents: q must be >= 2");
}

}  // namespace

double s_small(int d, double q) {
    check_dim(d);
    check_q(q);
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    return 0.5 * (d - 1) * (0.5 - inv_q);
}

double s_large(int d, double q) {
    check_dim(d);
    check_q(q);
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    return 0.5 * (d - 1) - d * inv_q;
}

double s_sobolev(int d, double q) {
    check_dim(d);
    check_q(q);
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    return 0.5 * d - (d + 2) * inv_q;
}

double mu(int d, double q) {
    return std::max({s_small(d, q), s_large(d, q), s_sobolev(d, q)});
}

double sigma(int d, double q) {
    return std::max(s_small(d, q), s_large(d, q));
}

Rational s_small(int d, const Rational& q) {
    check_dim(d);
    return Rational(d - 1, 2) * (Rational(1, 2) - Rational(1) / q);
}

Rational s_large(int d, const Rational& q) {
    check_dim(d);
    return Rational(d - 1, 2) - Rational(d) / q;
}

Rational s_sobolev(int d, const Rational& q) {
    check_dim(d);
    return Rational(d, 2) - Rational(d + 2) / q;
}

Rational mu(int d, const Rational& q) {
    return max(max(s_small(d, q), s_large(d, q)), s_sobolev(d, q));
}

Rational sigma(int d, const Rational& q) {
    return max(s_small(d, q), s_large(d, q));
}

bool admissible_pair(int d, double p, double q) {
    check_dim(d);
    if (!(p >= 2.0) || !(q >= 2.0)) return false;
    if (d == 2) {
        if (std::isinf(q)) return false;  // strict q < infinity in d = 2
    } else {
        const double q_max = 2.0 * d / (d - 2);
        if (q > q_max) return false;
    }
    const double lhs = d * (0.5 - (std::isinf(q) ? 0.0 : 1.0 / q));
    const double rhs = std::isinf(p) ? 0.0 : 2.0 / p;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    return std::abs(lhs - rhs) <= 1e-12 * scale;
}

std::vector<Rational> breakpoints(int d) {
    check_dim(d);
    if (d == 2) return {Rational(14, 3)};
    const Rational q1(2 * (d + 1), d - 1);
    const Rational q2(4);
    if (q1 == q2) return {q2};
    return {q1, q2};
}

ExponentFit fit_power_law(const std::vector<std::pair<double, double>>& samples,
                          bool drop_smallest) {
    std::vector<std::pair<double, double>> pts(samples);
    std::sort(pts.begin(), pts.end());
    if (drop_smallest && pts.size() > 2) pts.erase(pts.begin());
    if (pts.size() < 2) throw std::invalid_argument("fit_power_law: need >= 2 samples");

    std::vector<double> xs, ys;
    for (const auto& [lam, val] : pts) {
        if (!(lam > 0.0) || !(val > 0.0))
            throw std::invalid_argument("fit_power_law: samples must be positive");
        xs.push_back(std::log(lam));
        ys.push_back(std::log(val));
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] == xs[i - 1])
            throw std::invalid_argument("fit_power_law: duplicate lambda");

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_power_law: degenerate lambdas");

    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.sample_count = static_cast<int>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.max_residual = std::max(fit.max_residual,
                                    std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
    return fit;
}

}  // namespace zoll::exponents
