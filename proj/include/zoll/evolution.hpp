#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "zoll/bump.hpp"
#include "zoll/harmonics.hpp"
#include "zoll/quadrature.hpp"

namespace zoll::evolution {

using harmonics::Complex;
using harmonics::ModalField;
using harmonics::ZonalField;
using quadrature::QuadratureGrid;

// Solution samples of u(t) = e^{-it Laplacian} f on grid x time grid, held as
// the generating mode data; rows in theta are synthesized on demand through a
// sparse-spectrum inverse FFT (time frequencies k(k+1) are even integers, so
// everything is pi-periodic and a full-period uniform grid is exact).
struct SpaceTimeField {
    std::variant<ZonalField, ModalField> source;
    QuadratureGrid grid;
    std::vector<int> levels;
    // Modal fields are too wide for exact time quadrature at desk scale;
    // their norms subsample the period at this many uniform nodes (the
    // zonal path always uses the grid's exact n_t).
    std::size_t modal_time_samples = 256;
    int n_threads = 1;

    bool zonal() const { return std::holds_alternative<ZonalField>(source); }
    const ZonalField& zonal_source() const { return std::get<ZonalField>(source); }
    const ModalField& modal_source() const { return std::get<ModalField>(source); }
    double source_l2() const;
};

SpaceTimeField propagate(const ZonalField& f, const QuadratureGrid& grid);
SpaceTimeField propagate(const ModalField& f, const QuadratureGrid& grid);

// (integral of |u|^q dx dt over the grid's time interval)^(1/q).
double spacetime_norm(const SpaceTimeField& u, double q);

// Same norm restricted to t in [0, 1]: full-period samples with t <= 1 kept
// and the endpoint weights halved (trapezoid restriction). Zonal only; slope
// fits use the full-period norm, this is the reported-separately variant.
double spacetime_norm_unit_interval(const SpaceTimeField& u, double q);

enum class Var { Space, Time };

// Iterated norm, inner integral first: e.g. inner (Time, 4), outer (Space, q)
// is the L^q_x L^4_t quantity.
double mixed_norm(const SpaceTimeField& u, Var inner_var, double inner_p,
                  Var outer_var, double outer_p);

// max over grid times of | ||u(., t)||_{L2} - ||f||_{L2} |.
double unitarity_deviation(const SpaceTimeField& u);

// max over sample times of |u(x0, t + pi) - u(x0, t)| at the pole
// (direct mode summation, off-grid times).
double periodicity_deviation(const SpaceTimeField& u, int n_samples = 64);

// Fraction of energy of the pole time series outside the bins {k(k+1)}:
// synthesizes u(x0, t_n) by direct summation on an alias-free grid, DFTs it,
// and measures off-bin energy relative to the total.
double time_band_leakage(const SpaceTimeField& u);

// Exact full-period integral of |u|^4 dx dt via the time-spectrum
// autocorrelation: pairs (k, l) grouped by the level sets k(k+1) + l(l+1),
// no time quadrature. Independent of the FFT path. Zonal only.
double l4_integral_autocorrelation(const SpaceTimeField& u);

// Same quantity through the quadrature/FFT path (for the cross-check).
double l4_integral_quadrature(const SpaceTimeField& u);

struct PeakReport {
    double peak_value = 0.0;  // |u(x0, 0)|
    double min_ratio = 0.0;   // min over |t| <= delta lambda^{-2} of |u(x0,t)|/peak
};

// Pole-peak persistence of the cluster kernel under the flow, evaluated by
// direct mode summation on a fine local time grid.
PeakReport peak_persistence(double lambda, const tiling::SmoothBump& bump,
                            double delta, int n_samples = 65);

// Grid for a zonal/modal field sized from its own band.
QuadratureGrid grid_for(const ZonalField& f, double q, double oversample = 8.0);
QuadratureGrid grid_for(const ModalField& f, double q, double oversample = 8.0);

}  // namespace zoll::evolution
