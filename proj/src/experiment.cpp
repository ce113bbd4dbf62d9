#include "zoll/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zoll/bump.hpp"
#include "zoll/counting.hpp"
#include "zoll/evolution.hpp"
#include "zoll/quadrature.hpp"
#include "zoll/whitney.hpp"

namespace zoll::experiment {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<std::string> kNormColumns = {
    "family", "lambda", "q", "norm_kind", "value", "grid_meta", "runtime_s"};

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void ExperimentConfig::validate() const {
    static const std::vector<std::string> kinds = {
        "exponent-table", "fit",  "simulate",       "count",
        "whitney-audit",  "weyl", "circle-baseline"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw std::invalid_argument("unknown experiment kind: " + kind);
    if (kind == "fit" || kind == "simulate") {
        static const std::vector<std::string> families = {
            "zonal", "highest_weight", "cluster_kernel", "random"};
        if (std::find(families.begin(), families.end(), family) == families.end())
            throw std::invalid_argument("unknown family: " + family);
        if (lambdas.empty()) throw std::invalid_argument("lambda list is empty");
        if (qs.empty()) throw std::invalid_argument("q list is empty");
    }
    if (kind == "count") {
        static const std::vector<std::string> families = {"annulus", "triple",
                                                          "representation"};
        if (std::find(families.begin(), families.end(), family) == families.end())
            throw std::invalid_argument("count family must be annulus|triple|representation");
    }
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (lambdas[i] <= lambdas[i - 1])
            throw std::invalid_argument("lambda list must be strictly increasing");
    for (double q : qs)
        if (!(q >= 2.0)) throw std::invalid_argument("q values must be >= 2");
    if (dim < 2) throw std::invalid_argument("dim must be >= 2");
    if (!(oversample >= 1.0)) throw std::invalid_argument("oversample must be >= 1");
    if (!(theta0 > 0.0)) throw std::invalid_argument("theta0 must be positive");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (samples <= 0) throw std::invalid_argument("samples must be positive");
    if (!(runtime_limit_s > 0.0)) throw std::invalid_argument("runtime limit must be positive");
    if (n_threads < 1) throw std::invalid_argument("n_threads must be >= 1");
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
}

std::string ExperimentConfig::to_json() const {
    nlohmann::json j_out;
    j_out["kind"] = kind;
    j_out["family"] = family;
    j_out["lambdas"] = lambdas;
    j_out["qs"] = qs;
    j_out["dim"] = dim;
    j_out["oversample"] = oversample;
    j_out["delta"] = delta;
    j_out["alpha"] = alpha;
    j_out["j"] = j;
    j_out["c0"] = c0;
    j_out["theta0"] = theta0;
    j_out["samples"] = samples;
    j_out["seed"] = seed;
    j_out["out"] = out;
    j_out["assert"] = assert_mode;
    j_out["runtime_limit_s"] = runtime_limit_s;
    j_out["n_threads"] = n_threads;
    return j_out.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    nlohmann::json j_in;
    try {
        j_in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig c;
    try {
        for (const auto& [key, value] : j_in.items()) {
            if (key == "kind") c.kind = value.get<std::string>();
            else if (key == "family") c.family = value.get<std::string>();
            else if (key == "lambdas") c.lambdas = value.get<std::vector<long long>>();
            else if (key == "qs") c.qs = value.get<std::vector<double>>();
            else if (key == "dim") c.dim = value.get<int>();
            else if (key == "oversample") c.oversample = value.get<double>();
            else if (key == "delta") c.delta = value.get<double>();
            else if (key == "alpha") c.alpha = value.get<long long>();
            else if (key == "j") c.j = value.get<long long>();
            else if (key == "c0") c.c0 = value.get<double>();
            else if (key == "theta0") c.theta0 = value.get<double>();
            else if (key == "samples") c.samples = value.get<long long>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "out") c.out = value.get<std::string>();
            else if (key == "assert") c.assert_mode = value.get<bool>();
            else if (key == "runtime_limit_s") c.runtime_limit_s = value.get<double>();
            else if (key == "n_threads") c.n_threads = value.get<int>();
            else throw std::invalid_argument("unknown config key: " + key);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config value error: ") + e.what());
    }
    return c;
}

void CsvTable::write(std::ostream& os, bool with_timestamp) const {
    os << "# schema " << schema << "\n";
    if (with_timestamp) {
        const std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        os << "# generated " << buf << "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

std::string CsvTable::body() const {
    // The deterministic payload: everything except wall-clock measurements.
    // A trailing runtime column is still emitted in the full CSV, but it
    // cannot take part in byte-identity guarantees.
    std::size_t n_cols = columns.size();
    if (n_cols > 0 && columns[n_cols - 1] == "runtime_s") --n_cols;
    std::ostringstream os;
    for (std::size_t i = 0; i < n_cols; ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
        const std::size_t n = std::min(row.size(), n_cols);
        for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

double zonal_lq_norm(const harmonics::ZonalField& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("zonal_lq_norm: q must be >= 1");
    const int kmax = std::max(f.max_degree(), 0);
    const int qc = static_cast<int>(std::ceil(q - 1e-12));
    const bool exact = std::abs(q - qc) < 1e-12;
    // |f|^q is a polynomial in cos(theta) of degree q*kmax when q is an even
    // integer; otherwise oversample by 4
    int n = qc * kmax / 2 + 1;
    if (!exact || qc % 2 != 0) n = 4 * n + 8;
    const auto rule = quadrature::gauss_legendre_nodes(n);
    std::vector<double> vals(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        vals[i] = std::pow(std::abs(f.evaluate(rule.nodes[i])), q);
    quadrature::QuadratureGrid grid;
    grid.costheta_nodes = rule.nodes;
    grid.costheta_weights = rule.weights;
    return std::pow(quadrature::sphere_integral_zonal(vals, grid), 1.0 / q);
}

std::vector<std::pair<double, double>> family_norm_samples(
    const std::string& family, const std::vector<long long>& lambdas, double q,
    double oversample, std::uint64_t seed, int n_threads, CsvTable* rows_out) {
    const auto beta = tiling::make_lp_bump();
    std::vector<std::pair<double, double>> samples;

    auto emit = [&](long long lam, const std::string& norm_kind, double value,
                    const std::string& grid_meta, double dt) {
        if (!rows_out) return;
        if (rows_out->columns.empty()) rows_out->columns = kNormColumns;
        rows_out->rows.push_back({family, std::to_string(lam), format_number(q),
                                  norm_kind, format_number(value), grid_meta,
                                  format_number(dt)});
    };

    for (long long lam : lambdas) {
        const auto t0 = Clock::now();
        if (family == "zonal") {
            const auto f = harmonics::zonal_harmonic(static_cast<int>(lam));
            const double v = zonal_lq_norm(f, q);
            samples.emplace_back(static_cast<double>(lam), v);
            emit(lam, "lq_space", v, "gauss_legendre", seconds_since(t0));
        } else if (family == "highest_weight") {
            const double v = harmonics::highest_weight_lq_norm(static_cast<int>(lam), q);
            samples.emplace_back(static_cast<double>(lam), v);
            emit(lam, "lq_space", v, "closed_form", seconds_since(t0));
        } else if (family == "cluster_kernel") {
            const auto f = harmonics::cluster_kernel(static_cast<double>(lam), beta);
            auto u = evolution::propagate(
                f, evolution::grid_for(f, q, oversample));
            u.n_threads = n_threads;
            const double v = evolution::spacetime_norm(u, q);
            samples.emplace_back(static_cast<double>(lam), v);
            std::ostringstream meta;
            meta << "ntheta=" << u.grid.costheta_nodes.size() << ";nt=" << u.grid.n_t;
            emit(lam, "lq_spacetime", v, meta.str(), seconds_since(t0));
            emit(lam, "l2", f.l2_norm(), "coefficients", seconds_since(t0));
            emit(lam, "peak", harmonics::weyl_sum(static_cast<double>(lam), beta) / lam,
                 "closed_form", seconds_since(t0));
        } else if (family == "random") {
            const auto f = harmonics::random_band_field(static_cast<double>(lam), beta,
                                                        seed + static_cast<std::uint64_t>(lam));
            auto u = evolution::propagate(f, evolution::grid_for(f, q, oversample));
            u.n_threads = n_threads;
            u.modal_time_samples = 128;
            const double v = evolution::spacetime_norm(u, q);
            samples.emplace_back(static_cast<double>(lam), v);
            std::ostringstream meta;
            meta << "ntheta=" << u.grid.costheta_nodes.size() << ";nphi=" << u.grid.n_phi
                 << ";nts=" << u.modal_time_samples;
            emit(lam, "lq_spacetime_sampled", v, meta.str(), seconds_since(t0));
        } else {
            throw std::invalid_argument("unknown family: " + family);
        }
    }
    return samples;
}

double circle_l4_integral(const CircleModes& modes) {
    // |u|^2 has one spectral line per (k - l, k^2 - l^2); Parseval on the
    // doubly periodic torus S^1 x [0, 2pi] gives the integral exactly
    std::map<std::pair<long long, long long>, std::complex<double>> lines;
    for (const auto& [k, ck] : modes)
        for (const auto& [l, cl] : modes)
            lines[{k - l, k * k - l * l}] += ck * std::conj(cl);
    double s = 0.0;
    for (const auto& [key, v] : lines) s += std::norm(v);
    return kTwoPi * kTwoPi * s;
}

exponents::ExponentFit circle_baseline(const std::vector<long long>& lambdas,
                                       std::uint64_t seed, CsvTable* rows_out) {
    std::vector<std::pair<double, double>> samples;
    for (long long lam : lambdas) {
        const auto t0 = Clock::now();
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(lam));
        std::normal_distribution<double> gauss(0.0, 1.0);
        CircleModes modes;
        double l2sq = 0.0;
        for (long long k = lam / 2; k <= lam; ++k) {
            const std::complex<double> c{gauss(rng), gauss(rng)};
            modes.emplace_back(k, c);
            l2sq += std::norm(c);
        }
        const double ratio =
            std::pow(circle_l4_integral(modes), 0.25) / std::sqrt(kTwoPi * l2sq);
        samples.emplace_back(static_cast<double>(lam), ratio);
        if (rows_out) {
            if (rows_out->columns.empty()) rows_out->columns = kNormColumns;
            rows_out->rows.push_back({"circle_random", std::to_string(lam), "4",
                                      "l4_ratio", format_number(ratio), "autocorrelation",
                                      format_number(seconds_since(t0))});
        }
    }
    return exponents::fit_power_law(samples);
}

namespace {

void run_exponent_table(const ExperimentConfig& c, ExperimentResult& r) {
    std::vector<double> qs = c.qs;
    if (qs.empty()) qs = {2.0, 3.0, 4.0, 14.0 / 3.0, 5.0, 6.0, 8.0, 16.0};
    r.table.schema = "zoll-exponents-1";
    r.table.columns = {"dim", "q", "s_small", "s_large", "s_sobolev", "mu", "sigma"};
    for (double q : qs) {
        r.table.rows.push_back({std::to_string(c.dim), format_number(q),
                                format_number(exponents::s_small(c.dim, q)),
                                format_number(exponents::s_large(c.dim, q)),
                                format_number(exponents::s_sobolev(c.dim, q)),
                                format_number(exponents::mu(c.dim, q)),
                                format_number(exponents::sigma(c.dim, q))});
    }
    if (c.assert_mode) {
        // exact branch-switch checks in rational arithmetic
        const bool ok2 =
            exponents::mu(2, Rational(14, 3)) == Rational(1, 7) &&
            exponents::breakpoints(2) == std::vector<Rational>{Rational(14, 3)};
        const auto bp3 = exponents::breakpoints(3);
        const bool ok3 = !bp3.empty() && bp3.back() == Rational(4);
        if (!ok2 || !ok3) {
            r.assert_ok = false;
            r.messages.push_back("exponent breakpoint check failed");
        }
    }
}

void run_fit(const ExperimentConfig& c, ExperimentResult& r) {
    const auto t0 = Clock::now();
    r.table.columns = kNormColumns;
    for (double q : c.qs) {
        if (seconds_since(t0) > c.runtime_limit_s) {
            r.messages.push_back("runtime limit reached; partial output");
            break;
        }
        const auto samples = family_norm_samples(c.family, c.lambdas, q, c.oversample,
                                                 c.seed, c.n_threads, &r.table);
        const auto fit = exponents::fit_power_law(samples, samples.size() > 3);
        r.fits.emplace_back(q, fit);
        r.table.rows.push_back({c.family, "0", format_number(q), "slope",
                                format_number(fit.slope), "fit",
                                format_number(seconds_since(t0))});
        if (c.assert_mode) {
            const double cap = exponents::mu(c.dim, q) + 0.05;
            if (fit.slope > cap) {
                r.assert_ok = false;
                std::ostringstream msg;
                msg << "slope " << fit.slope << " exceeds mu(" << c.dim << "," << q
                    << ") + 0.05 = " << cap << " for family " << c.family;
                r.messages.push_back(msg.str());
            }
        }
    }
}

void run_simulate(const ExperimentConfig& c, ExperimentResult& r) {
    const auto t0 = Clock::now();
    r.table.columns = kNormColumns;
    for (double q : c.qs) {
        if (seconds_since(t0) > c.runtime_limit_s) {
            r.messages.push_back("runtime limit reached; partial output");
            break;
        }
        family_norm_samples(c.family, c.lambdas, q, c.oversample, c.seed, c.n_threads,
                            &r.table);
    }
}

void run_count(const ExperimentConfig& c, ExperimentResult& r) {
    r.table.schema = "zoll-count-1";
    if (c.family == "annulus") {
        r.table.columns = {"lambda", "alpha", "c0", "index", "count"};
        for (long long lam : c.lambdas) {
            const auto p = counting::annulus_pair_count(lam, c.alpha, c.c0);
            for (std::size_t i = 0; i < p.counts.size(); ++i) {
                if (p.counts[i] == 0) continue;
                r.table.rows.push_back({std::to_string(lam), std::to_string(c.alpha),
                                        format_number(c.c0),
                                        std::to_string(p.index_lo + static_cast<long long>(i)),
                                        std::to_string(p.counts[i])});
            }
            r.messages.push_back("lambda " + std::to_string(lam) + ": max count " +
                                 std::to_string(p.max_count) + " at j = " +
                                 std::to_string(p.argmax));
        }
    } else if (c.family == "triple") {
        r.table.columns = {"lambda", "j", "l1", "l2", "count"};
        for (long long lam : c.lambdas) {
            const auto p = counting::triple_level_sets(lam, c.j);
            for (const auto& [key, count] : p.cells)
                r.table.rows.push_back({std::to_string(lam), std::to_string(c.j),
                                        std::to_string(key[0]), std::to_string(key[1]),
                                        std::to_string(count)});
            r.messages.push_back("lambda " + std::to_string(lam) + ": max cell " +
                                 std::to_string(p.max_count));
        }
    } else {  // representation
        r.table.columns = {"ell", "count"};
        for (long long ell = 0; ell <= c.samples; ++ell)
            r.table.rows.push_back(
                {std::to_string(ell), std::to_string(counting::pair_representation_count(ell))});
        const auto [mx, arg] = counting::max_pair_representation(c.samples);
        r.messages.push_back("max representation count " + std::to_string(mx) +
                             " at ell = " + std::to_string(arg));
    }
}

void run_whitney(const ExperimentConfig& c, ExperimentResult& r) {
    r.table.schema = "zoll-whitney-1";
    r.table.columns = {"pair", "x1", "y1", "x2", "y2", "residual", "m",
                       "i1", "j1", "i2", "j2", "cube_dist", "close_scales"};
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int m_max = static_cast<int>(std::ceil(std::log2(4.0 / c.theta0))) + 2;
    long long violations = 0;
    for (long long i = 0; i < c.samples; ++i) {
        tiling::Point2 p1{unif(rng), unif(rng)};
        tiling::Point2 p2{unif(rng), unif(rng)};
        if (i % 8 == 0) {  // mix in near-diagonal pairs
            p2.x = p1.x + (unif(rng) - 0.5) * 3.0 * c.theta0;
            p2.y = p1.y + (unif(rng) - 0.5) * 3.0 * c.theta0;
        }
        const auto res = tiling::whitney_locate(p1, p2, c.theta0);
        const double sep = std::hypot(p1.x - p2.x, p1.y - p2.y);
        int n_close = 0;
        double cube_dist = 0.0;
        if (res.residual) {
            if (sep > 4.0 * c.theta0) ++violations;
        } else {
            n_close = tiling::count_close_scales(p1, p2, c.theta0, m_max);
            const double theta = c.theta0 * std::ldexp(1.0, res.scale_exponent);
            cube_dist = tiling::cube_distance(res.cube1, res.cube2, theta);
            if (n_close != 1 || cube_dist < theta || cube_dist > 8.0 * theta) ++violations;
        }
        r.table.rows.push_back(
            {std::to_string(i), format_number(p1.x), format_number(p1.y),
             format_number(p2.x), format_number(p2.y), res.residual ? "1" : "0",
             std::to_string(res.scale_exponent), std::to_string(res.cube1[0]),
             std::to_string(res.cube1[1]), std::to_string(res.cube2[0]),
             std::to_string(res.cube2[1]), format_number(cube_dist),
             std::to_string(n_close)});
    }
    r.messages.push_back("whitney violations: " + std::to_string(violations));
    if (c.assert_mode && violations != 0) r.assert_ok = false;
}

void run_weyl(const ExperimentConfig& c, ExperimentResult& r) {
    const auto beta = tiling::make_lp_bump();
    r.table.schema = "zoll-weyl-1";
    r.table.columns = {"lambda", "weyl_sum"};
    std::vector<std::pair<double, double>> samples;
    for (long long lam : c.lambdas) {
        const double w = harmonics::weyl_sum(static_cast<double>(lam), beta);
        samples.emplace_back(static_cast<double>(lam), w);
        r.table.rows.push_back({std::to_string(lam), format_number(w)});
    }
    if (samples.size() >= 2) {
        const auto fit = exponents::fit_power_law(samples);
        r.fits.emplace_back(0.0, fit);
        r.messages.push_back("weyl slope " + format_number(fit.slope));
        if (c.assert_mode && std::abs(fit.slope - 2.0) > 0.02) r.assert_ok = false;
    }
}

void run_circle(const ExperimentConfig& c, ExperimentResult& r) {
    r.table.columns = kNormColumns;
    const auto fit = circle_baseline(c.lambdas, c.seed, &r.table);
    r.fits.emplace_back(4.0, fit);
    r.messages.push_back("circle l4 ratio slope " + format_number(fit.slope));
    if (c.assert_mode && std::abs(fit.slope) > 0.02) r.assert_ok = false;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult r;
    if (config.kind == "exponent-table") run_exponent_table(config, r);
    else if (config.kind == "fit") run_fit(config, r);
    else if (config.kind == "simulate") run_simulate(config, r);
    else if (config.kind == "count") run_count(config, r);
    else if (config.kind == "whitney-audit") run_whitney(config, r);
    else if (config.kind == "weyl") run_weyl(config, r);
    else run_circle(config, r);
    return r;
}

int exit_code(const ExperimentResult& result) { return result.assert_ok ? 0 : 2; }

}  // namespace zoll::experiment
