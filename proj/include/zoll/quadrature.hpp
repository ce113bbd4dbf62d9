#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zoll::quadrature {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], increasing
    std::vector<double> weights;  // sum to 2
};

// Roots of P_n with the standard weights, Newton-refined from Chebyshev
// initial guesses; each node accurate to ~1e-14.
GaussLegendreRule gauss_legendre_nodes(int n);

// Product grid for norms on S^2 x [t0, t1]: Gauss-Legendre in cos(theta),
// uniform longitudes, uniform time nodes over a full period (periodic
// trapezoid, so trigonometric polynomials of degree < n_t integrate exactly).
struct QuadratureGrid {
    std::vector<double> costheta_nodes;
    std::vector<double> costheta_weights;   // GL weights, integrate d(cos theta)
    int n_phi = 1;
    std::size_t n_t = 1;
    double t_lo = 0.0;
    double t_hi = 0.0;       // full period; weight per node = (t_hi - t_lo)/n_t
    int exact_poly_degree = 0;   // max degree in cos(theta) integrated exactly
    std::size_t exact_time_bandwidth = 0;  // max |j| with e^{2ijt} exact

    double sphere_weight(std::size_t i_theta, int /*i_phi*/) const {
        return costheta_weights[i_theta] * phi_weight();
    }
    double phi_weight() const;
    double time_weight() const { return (t_hi - t_lo) / static_cast<double>(n_t); }
};

// Sizes the grid for |u|^q exactness (even q) or controlled oversampling
// (fractional q): n_theta >= ceil(q)*k_max/2 + 1, n_phi for azimuthal bands,
// n_t beyond the |u|^ceil(q) time bandwidth. Rejects grids whose sample
// storage would exceed memory_budget bytes (streaming works row-by-row in
// theta, so the budget applies to a single row's FFT buffer times n_phi).
QuadratureGrid build_grid(int k_max, double q, bool zonal, double oversample = 8.0,
                          std::size_t memory_budget = std::size_t{2} << 30);

// Smallest 2^a 3^b 5^c >= n (sizes FFTW handles at O(n log n)).
std::size_t next_fast_fft_size(std::size_t n);

// Pairwise (cascade) reduction; fixed association order so parallel and
// serial runs agree to round-off.
double pairwise_sum(std::span<const double> v);

// Integral over S^2 of zonal samples (one value per colatitude node).
double sphere_integral_zonal(std::span<const double> values, const QuadratureGrid& grid);

}  // namespace zoll::quadrature
