#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zoll/bump.hpp"
#include "zoll/quadrature.hpp"

namespace zoll::harmonics {

using Complex = std::complex<double>;

// P_0(x) .. P_kmax(x) by the upward three-term recurrence (stable on [-1,1]).
std::vector<double> legendre_sequence(int k_max, double x);

// Fully normalized associated Legendre column: values of
//   Pbar_k^m(x) = sqrt((2k+1)/(4pi) * (k-m)!/(k+m)!) * P_k^m(x)
// for k = m..k_max, so that Pbar_k^m(cos theta) e^{im phi} has unit L2(S^2)
// norm. Seeded in scaled arithmetic so (sin theta)^m never over/underflows.
std::vector<double> assoc_legendre_column(int k_max, int m, double x);

// Zonal function about the north pole, d = 2. Coefficients are taken in the
// unit-normalized basis Y_k(theta) = sqrt((2k+1)/(4pi)) P_k(cos theta), so
// ||f||_{L2(S^2)}^2 = sum |c_k|^2.
struct ZonalField {
    std::vector<Complex> coeff;  // index = degree k

    int max_degree() const { return static_cast<int>(coeff.size()) - 1; }
    Complex evaluate(double costheta) const;
    double l2_norm() const;
    std::vector<int> levels() const;  // degrees with nonzero coefficient
    std::string to_json() const;
    static ZonalField from_json(const std::string& text);
};

// Sparse (k, m) expansion in the unit-normalized basis
// Ybar_k^m = Pbar_k^m(cos theta) e^{im phi}; ||f||^2 = sum |c|^2.
struct ModalField {
    struct Entry {
        int k = 0;
        int m = 0;  // |m| <= k; negative m uses Pbar_k^{|m|} e^{im phi}
        Complex c;
    };
    std::vector<Entry> entries;

    int max_degree() const;
    Complex evaluate(double costheta, double phi) const;
    double l2_norm() const;
    std::vector<int> levels() const;
    std::string to_json() const;
    static ModalField from_json(const std::string& text);
};

// Unit-L2 zonal spherical harmonic of degree k.
ZonalField zonal_harmonic(int k);

// Unit-L2 highest weight harmonic c_k (sin theta)^k e^{ik phi}.
ModalField highest_weight(int k);

// log of c_k = [2 pi 2^{2k+1} (k!)^2 / (2k+1)!]^{-1/2} (log-Gamma form).
double highest_weight_log_coeff(int k);

// ||Q_k||_{L^q(S^2)} in closed form via the Wallis integral
// int_0^pi sin^n = sqrt(pi) Gamma((n+1)/2) / Gamma(n/2+1); exact for any
// real q >= 0 and safe for k up to 2^14 (all log-domain).
double highest_weight_lq_norm(int k, double q);

// Normalized band projector kernel about the pole:
// f_lambda = lambda^{-1} sum_k beta(sqrt(k(k+1))/lambda) (2k+1)/(4pi) P_k,
// the d = 2 cluster kernel. ||f_lambda||_{L2}^2 =
// lambda^{-2} sum beta^2 (2k+1)/(4pi) by the addition theorem.
ZonalField cluster_kernel(double lambda, const tiling::SmoothBump& bump);

// sum_k beta(sqrt(k(k+1))/lambda) (2k+1)/(4pi)  (pointwise Weyl sum; the
// kernel's on-diagonal value is weyl_sum / lambda).
double weyl_sum(double lambda, const tiling::SmoothBump& bump);

// Band-limited random field: independent complex Gaussians on every (k, m)
// with k in the band, scaled by bump(sqrt(k(k+1))/lambda), then normalized
// to ||f||_{L2} = 1. Deterministic for a fixed seed.
ModalField random_band_field(double lambda, const tiling::SmoothBump& bump,
                             std::uint64_t seed);

}  // namespace zoll::harmonics
