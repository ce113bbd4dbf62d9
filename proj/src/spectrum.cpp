#include "zoll/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zoll::spectrum {

SpectrumModel SpectrumModel::exact_sphere(int d) {
    if (d < 2) throw std::invalid_argument("spectrum: dimension must be >= 2");
    SpectrumModel m;
    m.kind = Kind::ExactSphere;
    m.dim = d;
    m.period = 2.0 * std::numbers::pi;
    m.maslov = 2;
    m.cluster_width = 1.0;
    return m;
}

SpectrumModel SpectrumModel::abstract_zoll(double T, int alpha, double A) {
    if (!(T > 0.0)) throw std::invalid_argument("spectrum: period must be positive");
    if (alpha < 0) throw std::invalid_argument("spectrum: Maslov index must be >= 0");
    if (A < 0.0) throw std::invalid_argument("spectrum: cluster width must be >= 0");
    SpectrumModel m;
    m.kind = Kind::AbstractZoll;
    m.period = T;
    m.maslov = alpha;
    m.cluster_width = A;
    return m;
}

double sphere_eigenvalue(int d, int k) {
    if (d < 2) throw std::invalid_argument("spectrum: dimension must be >= 2");
    if (k < 0) throw std::invalid_argument("spectrum: level must be >= 0");
    return std::sqrt(static_cast<double>(k) * (static_cast<double>(k) + d - 1));
}

Interval zoll_cluster_interval(const SpectrumModel& model, int k) {
    if (k < 1) throw std::invalid_argument("spectrum: cluster index must be >= 1");
    const double center = (2.0 * std::numbers::pi / model.period) * (k + model.maslov / 4.0);
    const double half = model.cluster_width / k;
    return {center - half, center + half};
}

Interval unit_band_interval(int alpha, int k) {
    if (k < 1) throw std::invalid_argument("spectrum: band index must be >= 1");
    return {k + (alpha - 2) / 4.0, k + (alpha + 2) / 4.0};
}

int disjointness_threshold(const SpectrumModel& model) {
    const double gap = 2.0 * std::numbers::pi / model.period;
    const double A = model.cluster_width;
    int k = 1;
    while (A / k + A / (k + 1.0) >= gap) ++k;
    return k;
}

std::vector<int> band_levels(double lambda, const std::function<double(double)>& bump,
                             int d, double support_hi) {
    std::vector<int> levels;
    if (!(lambda > 0.0)) return levels;
    // bump(s) = 0 for s >= support_hi, so sqrt(k(k+d-1)) < support_hi * lambda
    // bounds the scan.
    const int k_cap = static_cast<int>(std::ceil(support_hi * lambda)) + 2;
    for (int k = 0; k <= k_cap; ++k) {
        if (bump(sphere_eigenvalue(d, k) / lambda) != 0.0) levels.push_back(k);
    }
    return levels;
}

}  // namespace zoll::spectrum
