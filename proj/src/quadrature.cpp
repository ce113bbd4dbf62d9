#include "zoll/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zoll::quadrature {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (n == 0) { p = p0; dp = 0.0; return; }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

GaussLegendreRule gauss_legendre_nodes(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_nodes: n must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    for (int i = 0; i < n; ++i) {
        // Chebyshev-angle initial guess for the (n-i)-th root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pair(n, x, p, dp);
        // the Chebyshev guesses run from +1 toward -1; store reversed so the
        // advertised order (increasing) holds
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

double QuadratureGrid::phi_weight() const {
    return 2.0 * std::numbers::pi / static_cast<double>(n_phi);
}

QuadratureGrid build_grid(int k_max, double q, bool zonal, double oversample,
                          std::size_t memory_budget) {
    if (k_max < 0) throw std::invalid_argument("build_grid: k_max must be >= 0");
    if (!(q >= 1.0)) throw std::invalid_argument("build_grid: q must be >= 1");
    if (!(oversample >= 1.0)) throw std::invalid_argument("build_grid: oversample must be >= 1");

    const int qc = static_cast<int>(std::ceil(q - 1e-12));
    const bool even_q = (qc % 2 == 0) && std::abs(q - qc) < 1e-12;

    QuadratureGrid grid;
    const int n_theta = qc * k_max / 2 + 1;
    auto rule = gauss_legendre_nodes(n_theta);
    grid.costheta_nodes = std::move(rule.nodes);
    grid.costheta_weights = std::move(rule.weights);
    grid.exact_poly_degree = 2 * n_theta - 1;
    grid.n_phi = zonal ? 1
                       : static_cast<int>(next_fast_fft_size(
                             static_cast<std::size_t>(2 * qc * k_max + 1)));

    // Time frequencies of u are k(k+1), i.e. 2*nu with integer nu <= nu_max;
    // the grid covers the full d=2 period [0, pi].
    const std::size_t nu_max =
        static_cast<std::size_t>(k_max) * (static_cast<std::size_t>(k_max) + 1) / 2;
    std::size_t n_t;
    if (even_q) {
        // |u|^q is a trigonometric polynomial of degree (q/2)*nu_max in
        // e^{2it}: one sample past the bandwidth is exact.
        n_t = static_cast<std::size_t>(qc / 2) * nu_max + 1;
    } else {
        const std::size_t half = static_cast<std::size_t>((qc + 1) / 2);
        n_t = static_cast<std::size_t>(std::ceil(oversample * static_cast<double>(half * nu_max + 1)));
    }
    grid.n_t = next_fast_fft_size(n_t);
    grid.t_lo = 0.0;
    grid.t_hi = std::numbers::pi;
    grid.exact_time_bandwidth = grid.n_t - 1;

    const std::size_t row_bytes = grid.n_t * sizeof(std::complex<double>);
    if (row_bytes > memory_budget)
        throw std::length_error("build_grid: time row exceeds memory budget");
    return grid;
}

std::size_t next_fast_fft_size(std::size_t n) {
    if (n <= 1) return 1;
    while (true) {
        std::size_t m = n;
        while (m % 2 == 0) m /= 2;
        while (m % 3 == 0) m /= 3;
        while (m % 5 == 0) m /= 5;
        if (m == 1) return n;
        ++n;
    }
}

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double sphere_integral_zonal(std::span<const double> values, const QuadratureGrid& grid) {
    if (values.size() != grid.costheta_nodes.size())
        throw std::invalid_argument("sphere_integral_zonal: sample/grid size mismatch");
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        terms[i] = values[i] * grid.costheta_weights[i];
    return 2.0 * std::numbers::pi * pairwise_sum(terms);
}

}  // namespace zoll::quadrature
