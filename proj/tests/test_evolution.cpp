#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "zoll/bump.hpp"
#include "zoll/evolution.hpp"
#include "zoll/harmonics.hpp"

using namespace zoll;
using namespace zoll::evolution;
constexpr double kPi = std::numbers::pi;

TEST_CASE("constant field norms in closed form") {
    // f = c Y_0 is constant on the sphere and stationary under the flow
    ZonalField f;
    f.coeff = {harmonics::Complex{2.0, 0.0}};
    const double value = 2.0 / std::sqrt(4.0 * kPi);
    auto u = propagate(f, grid_for(f, 4.0));
    for (double q : {2.0, 4.0, 6.0}) {
        CHECK(spacetime_norm(u, q) ==
              doctest::Approx(value * std::pow(4.0 * kPi * kPi, 1.0 / q)).epsilon(1e-12));
    }
}

TEST_CASE("q=2 norm is sqrt(period) times the data norm") {
    const auto beta = tiling::make_lp_bump();
    const auto f = harmonics::cluster_kernel(16.0, beta);
    auto u = propagate(f, grid_for(f, 2.0));
    CHECK(spacetime_norm(u, 2.0) ==
          doctest::Approx(std::sqrt(kPi) * f.l2_norm()).epsilon(1e-10));

    // modal path: per-slice L2 is exact, so the sampled integral is too
    const auto r = harmonics::random_band_field(12.0, beta, 5);
    auto v = propagate(r, grid_for(r, 2.0));
    CHECK(spacetime_norm(v, 2.0) ==
          doctest::Approx(std::sqrt(kPi) * r.l2_norm()).epsilon(1e-10));
}

TEST_CASE("single mode evolves with constant modulus") {
    const auto z = harmonics::zonal_harmonic(9);
    auto u = propagate(z, grid_for(z, 6.0));
    // |u|^q integral equals pi * ||Z||_q^q for every t slice
    CHECK(spacetime_norm(u, 2.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
    CHECK(unitarity_deviation(u) < 1e-12);
    CHECK(mixed_norm(u, Var::Time, 4.0, Var::Space, 6.0) ==
          doctest::Approx(std::pow(kPi, 0.25) *
                          spacetime_norm(u, 6.0) / std::pow(kPi, 1.0 / 6.0))
              .epsilon(1e-10));
}

TEST_CASE("evolution invariants at 1e-10") {
    const auto beta = tiling::make_lp_bump();
    for (double lam : {16.0, 32.0, 64.0}) {
        const auto f = harmonics::cluster_kernel(lam, beta);
        auto u = propagate(f, grid_for(f, 4.0));
        REQUIRE(unitarity_deviation(u) < 1e-10);
        REQUIRE(periodicity_deviation(u) < 1e-10 * std::abs(f.evaluate(1.0)));
        REQUIRE(time_band_leakage(u) < 1e-10);
    }
    // modal field invariants
    const auto r = harmonics::random_band_field(12.0, beta, 42);
    auto v = propagate(r, grid_for(r, 4.0));
    CHECK(unitarity_deviation(v) < 1e-10);
    CHECK(periodicity_deviation(v) < 1e-10);
}

TEST_CASE("parseval cross-check for the q=4 norm") {
    const auto beta = tiling::make_lp_bump();
    for (double lam : {16.0, 32.0}) {
        const auto f = harmonics::cluster_kernel(lam, beta);
        auto u = propagate(f, grid_for(f, 4.0));
        const double by_pairs = l4_integral_autocorrelation(u);
        const double by_grid = l4_integral_quadrature(u);
        REQUIRE(std::abs(by_pairs - by_grid) <= 1e-8 * by_pairs);
    }
}

TEST_CASE("mixed norm reduces to the space-time norm at equal exponents") {
    const auto beta = tiling::make_lp_bump();
    const auto f = harmonics::cluster_kernel(16.0, beta);
    auto u = propagate(f, grid_for(f, 4.0));
    const double reference = spacetime_norm(u, 4.0);
    CHECK(mixed_norm(u, Var::Time, 4.0, Var::Space, 4.0) ==
          doctest::Approx(reference).epsilon(1e-10));
    CHECK(mixed_norm(u, Var::Space, 4.0, Var::Time, 4.0) ==
          doctest::Approx(reference).epsilon(1e-10));
    CHECK_THROWS_AS(mixed_norm(u, Var::Time, 4.0, Var::Time, 6.0), std::invalid_argument);
}

TEST_CASE("modal path agrees with the zonal path on m=0 data") {
    // small band: 256 uniform time samples are past the |u|^4 bandwidth, so
    // the sampled modal integral is exact and must match the zonal engine
    const auto beta = tiling::make_lp_bump();
    const auto z = harmonics::cluster_kernel(5.0, beta);
    ModalField m;
    for (int k = 0; k <= z.max_degree(); ++k)
        if (z.coeff[k] != harmonics::Complex{0.0, 0.0})
            m.entries.push_back({k, 0, z.coeff[k]});
    auto uz = propagate(z, grid_for(z, 4.0));
    auto um = propagate(m, grid_for(m, 4.0));
    CHECK(spacetime_norm(um, 4.0) ==
          doctest::Approx(spacetime_norm(uz, 4.0)).epsilon(1e-10));
    CHECK(mixed_norm(um, Var::Time, 4.0, Var::Space, 4.0) ==
          doctest::Approx(spacetime_norm(uz, 4.0)).epsilon(1e-8));
    CHECK(mixed_norm(um, Var::Space, 4.0, Var::Time, 4.0) ==
          doctest::Approx(spacetime_norm(uz, 4.0)).epsilon(1e-8));
}

TEST_CASE("norms are independent of the thread count") {
    const auto beta = tiling::make_lp_bump();
    const auto f = harmonics::cluster_kernel(32.0, beta);
    auto u = propagate(f, grid_for(f, 4.0));
    const double serial = spacetime_norm(u, 4.0);
    u.n_threads = 3;
    CHECK(std::abs(spacetime_norm(u, 4.0) - serial) < 1e-12 * serial);

    const auto r = harmonics::random_band_field(12.0, beta, 9);
    auto v = propagate(r, grid_for(r, 4.0));
    const double vs = spacetime_norm(v, 4.0);
    v.n_threads = 4;
    CHECK(std::abs(spacetime_norm(v, 4.0) - vs) < 1e-12 * vs);
}

TEST_CASE("band exceeding the grid is rejected") {
    const auto beta = tiling::make_lp_bump();
    const auto f = harmonics::cluster_kernel(32.0, beta);
    const auto z8 = harmonics::zonal_harmonic(8);
    CHECK_THROWS_AS(propagate(f, grid_for(z8, 4.0)), std::invalid_argument);
}

TEST_CASE("unit interval restriction") {
    const auto beta = tiling::make_lp_bump();
    const auto f = harmonics::cluster_kernel(16.0, beta);
    auto u = propagate(f, grid_for(f, 2.0));
    const double full = spacetime_norm(u, 2.0);
    const double unit = spacetime_norm_unit_interval(u, 2.0);
    CHECK(unit < full);
    // unitarity: the [0,1] energy is exactly 1/pi of the period energy
    CHECK(unit == doctest::Approx(full / std::sqrt(kPi)).epsilon(0.02));
}

TEST_CASE("norm monotonicity in q on the probability-rescaled measure") {
    const auto beta = tiling::make_lp_bump();
    const auto f = harmonics::cluster_kernel(16.0, beta);
    auto u = propagate(f, grid_for(f, 6.0));
    double prev = 0.0;
    for (double q : {2.0, 3.0, 4.0, 5.0, 6.0}) {
        const double normalized =
            spacetime_norm(u, q) / std::pow(4.0 * kPi * kPi, 1.0 / q);
        CHECK(normalized >= prev * (1.0 - 1e-12));
        prev = normalized;
    }
}

TEST_CASE("peak persistence") {
    const auto beta = tiling::make_lp_bump();
    const auto report = peak_persistence(64.0, beta, 0.1);
    CHECK(report.peak_value ==
          doctest::Approx(harmonics::weyl_sum(64.0, beta) / 64.0).epsilon(1e-12));
    CHECK(report.min_ratio <= 1.0);
    CHECK(report.min_ratio >= 0.5);
    CHECK_THROWS_AS(peak_persistence(64.0, beta, -1.0), std::invalid_argument);
}
