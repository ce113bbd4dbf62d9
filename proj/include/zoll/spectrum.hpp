#pragma once

#include <functional>
#include <vector>

namespace zoll::spectrum {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return lo <= x && x <= hi; }
    double length() const { return hi - lo; }
};

// Cluster structure of sqrt(-Laplacian) on a Zoll manifold: eigenvalues lie
// in intervals centered at (2pi/T)(k + alpha/4) of half-width A/k.
// ExactSphere(d) carries its own eigenvalues sqrt(k(k+d-1)); AbstractZoll is
// cluster metadata only (no eigenfunctions).
struct SpectrumModel {
    enum class Kind { ExactSphere, AbstractZoll };
    Kind kind = Kind::ExactSphere;
    int dim = 2;                 // ExactSphere only
    double period = 6.283185307179586476925286766559;  // T
    int maslov = 2;              // alpha
    double cluster_width = 1.0;  // A

    static SpectrumModel exact_sphere(int d);
    static SpectrumModel abstract_zoll(double T, int alpha, double A);
};

double sphere_eigenvalue(int d, int k);

// I_k = [(2pi/T)(k + alpha/4) - A/k, (2pi/T)(k + alpha/4) + A/k], k >= 1.
Interval zoll_cluster_interval(const SpectrumModel& model, int k);

// Unit-length band [k + (alpha-2)/4, k + (alpha+2)/4] around the k-th cluster.
Interval unit_band_interval(int alpha, int k);

// Smallest k such that clusters I_k, I_{k+1}, ... are pairwise disjoint:
// A/k + A/(k+1) < 2pi/T.
int disjointness_threshold(const SpectrumModel& model);

// All k >= 0 with bump(sphere_eigenvalue(d,k)/lambda) != 0, increasing.
// The bump must vanish outside a compact subset of (0, infinity).
std::vector<int> band_levels(double lambda, const std::function<double(double)>& bump,
                             int d, double support_hi = 2.0);

}  // namespace zoll::spectrum
