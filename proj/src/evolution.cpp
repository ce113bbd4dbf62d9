#include "zoll/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fftw3.h>

#include "zoll/spectrum.hpp"

namespace zoll::evolution {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t time_frequency(int k) {
    // e^{itk(k+1)} = e^{2 i nu t} with nu = k(k+1)/2 (always an integer)
    return static_cast<std::size_t>(k) * (static_cast<std::size_t>(k) + 1) / 2;
}

// RAII FFTW buffer + plan of fixed length (backward transform, so
// out[n] = sum_j in[j] e^{+2 pi i j n / N}).
class InverseFft {
public:
    explicit InverseFft(std::size_t n) : n_(n) {
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        if (!buf_) throw std::bad_alloc();
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
    }
    ~InverseFft() {
        fftw_destroy_plan(plan_);
        fftw_free(buf_);
    }
    InverseFft(const InverseFft&) = delete;
    InverseFft& operator=(const InverseFft&) = delete;

    std::size_t size() const { return n_; }
    Complex* data() { return reinterpret_cast<Complex*>(buf_); }
    void clear() { std::fill(data(), data() + n_, Complex{0.0, 0.0}); }
    void execute() { fftw_execute(plan_); }

private:
    std::size_t n_;
    fftw_complex* buf_;
    fftw_plan plan_;
};

double power_abs(const Complex& z, double q) {
    const double p = std::norm(z);
    if (q == 2.0) return p;
    if (q == 4.0) return p * p;
    if (q == 6.0) return p * p * p;
    return std::pow(p, 0.5 * q);
}

// Row amplitudes A_k(theta) = c_k sqrt((2k+1)/4pi) P_k(cos theta).
std::vector<Complex> zonal_row_amplitudes(const ZonalField& f, double x) {
    const int kmax = f.max_degree();
    const auto p = harmonics::legendre_sequence(std::max(kmax, 0), x);
    std::vector<Complex> a(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        a[k] = f.coeff[k] * std::sqrt((2.0 * k + 1.0) / (4.0 * kPi)) * p[k];
    return a;
}

// Runs fn(row_index) over rows with the field's thread count; results must be
// written into per-row slots so the reduction order is fixed.
template <typename Fn>
void for_each_row(std::size_t n_rows, int n_threads, Fn&& fn) {
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n_rows; ++i) fn(i, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n_rows; i += n_threads) fn(i, t);
        });
    }
    for (auto& th : pool) th.join();
}

struct ModalRowTables {
    // per signed m: list of (level, amplitude at this theta)
    int m_lo = 0;
    std::vector<std::vector<std::pair<int, Complex>>> per_m;
    std::vector<int> band;  // distinct levels
};

ModalRowTables modal_row_tables(const ModalField& f, double x) {
    ModalRowTables t;
    const int kmax = f.max_degree();
    int m_min = 0, m_max = 0;
    for (const auto& e : f.entries) {
        m_min = std::min(m_min, e.m);
        m_max = std::max(m_max, e.m);
    }
    t.m_lo = m_min;
    t.per_m.resize(m_max - m_min + 1);
    // associated Legendre columns per |m|, built once each
    std::vector<std::vector<double>> col(std::max(std::abs(m_min), m_max) + 1);
    for (const auto& e : f.entries) {
        const int am = std::abs(e.m);
        if (col[am].empty()) col[am] = harmonics::assoc_legendre_column(kmax, am, x);
        const Complex amp = e.c * col[am][e.k - am];
        t.per_m[e.m - m_min].emplace_back(e.k, amp);
    }
    t.band = f.levels();
    return t;
}

}  // namespace

double SpaceTimeField::source_l2() const {
    return zonal() ? zonal_source().l2_norm() : modal_source().l2_norm();
}

QuadratureGrid grid_for(const ZonalField& f, double q, double oversample) {
    return quadrature::build_grid(std::max(f.max_degree(), 0), q, true, oversample);
}

QuadratureGrid grid_for(const ModalField& f, double q, double oversample) {
    return quadrature::build_grid(std::max(f.max_degree(), 0), q, false, oversample);
}

SpaceTimeField propagate(const ZonalField& f, const QuadratureGrid& grid) {
    SpaceTimeField u;
    u.source = f;
    u.grid = grid;
    u.levels = f.levels();
    const int kmax = f.max_degree();
    if (2 * kmax > grid.exact_poly_degree)
        throw std::invalid_argument("propagate: band exceeds grid spatial exactness");
    if (!u.levels.empty() && time_frequency(u.levels.back()) >= grid.n_t)
        throw std::invalid_argument("propagate: band exceeds grid time bandwidth");
    return u;
}

SpaceTimeField propagate(const ModalField& f, const QuadratureGrid& grid) {
    SpaceTimeField u;
    u.source = f;
    u.grid = grid;
    u.levels = f.levels();
    const int kmax = f.max_degree();
    if (2 * kmax > grid.exact_poly_degree)
        throw std::invalid_argument("propagate: band exceeds grid spatial exactness");
    if (grid.n_phi <= 2 * kmax)
        throw std::invalid_argument("propagate: band exceeds grid azimuthal resolution");
    return u;
}

namespace {

// sum over the full-period time grid of |u(theta_i, t_n)|^q, zonal path.
double zonal_row_power_sum(const SpaceTimeField& u, InverseFft& fft,
                           std::vector<double>& scratch, std::size_t row, double q) {
    const auto amps = zonal_row_amplitudes(u.zonal_source(), u.grid.costheta_nodes[row]);
    const std::size_t n_t = u.grid.n_t;
    fft.clear();
    for (int k : u.levels) fft.data()[time_frequency(k) % n_t] += amps[k];
    fft.execute();
    scratch.resize(n_t);
    const Complex* s = fft.data();
    for (std::size_t n = 0; n < n_t; ++n) scratch[n] = power_abs(s[n], q);
    return quadrature::pairwise_sum(scratch);
}

double modal_spacetime_integral(const SpaceTimeField& u, double q, Var inner_var,
                                double inner_p, double outer_p, bool mixed,
                                double* mixed_result) {
    // Streams theta rows; for each time sample, assembles h_m(t) from the
    // sparse level spectrum and FFTs over phi.
    const auto& f = u.modal_source();
    const auto& grid = u.grid;
    const std::size_t n_rows = grid.costheta_nodes.size();
    const std::size_t n_phi = static_cast<std::size_t>(grid.n_phi);
    const std::size_t n_ts = u.modal_time_samples;
    const double wt = kPi / static_cast<double>(n_ts);
    const double wphi = grid.phi_weight();
    const int kmax = f.max_degree();

    std::vector<double> row_vals(n_rows, 0.0);
    // inner-space mixed norm accumulates per-time spatial integrals
    std::vector<double> per_time(mixed && inner_var == Var::Space ? n_ts : 0, 0.0);
    std::vector<std::unique_ptr<InverseFft>> ffts;
    for (int t = 0; t < std::max(u.n_threads, 1); ++t)
        ffts.push_back(std::make_unique<InverseFft>(n_phi));

    std::vector<std::vector<double>> per_time_thread(
        mixed && inner_var == Var::Space ? std::max(u.n_threads, 1) : 0);
    for (auto& v : per_time_thread) v.assign(n_ts, 0.0);

    for_each_row(n_rows, u.n_threads, [&](std::size_t row, int tid) {
        auto& fft = *ffts[tid];
        const auto tables = modal_row_tables(f, grid.costheta_nodes[row]);
        std::vector<Complex> phase(kmax + 1);
        std::vector<double> tacc;  // per-time contributions for this row
        std::vector<double> inner_phi(mixed && inner_var == Var::Time ? n_phi : 0, 0.0);
        tacc.reserve(n_ts);
        for (std::size_t n = 0; n < n_ts; ++n) {
            const double t = kPi * static_cast<double>(n) / static_cast<double>(n_ts);
            for (int k : tables.band) {
                const double ang = 2.0 * t * static_cast<double>(time_frequency(k));
                phase[k] = Complex{std::cos(ang), std::sin(ang)};
            }
            fft.clear();
            for (std::size_t mi = 0; mi < tables.per_m.size(); ++mi) {
                Complex h{0.0, 0.0};
                for (const auto& [k, amp] : tables.per_m[mi]) h += amp * phase[k];
                if (h != Complex{0.0, 0.0}) {
                    const long m = tables.m_lo + static_cast<long>(mi);
                    const std::size_t slot =
                        static_cast<std::size_t>(((m % static_cast<long>(n_phi)) +
                                                  static_cast<long>(n_phi)) %
                                                 static_cast<long>(n_phi));
                    fft.data()[slot] += h;
                }
            }
            fft.execute();
            double s = 0.0;
            const Complex* uu = fft.data();
            if (mixed && inner_var == Var::Time) {
                for (std::size_t j = 0; j < n_phi; ++j)
                    inner_phi[j] += wt * power_abs(uu[j], inner_p);
            } else {
                for (std::size_t j = 0; j < n_phi; ++j) s += power_abs(uu[j], mixed ? inner_p : q);
                s *= wphi;
                if (mixed && inner_var == Var::Space) {
                    per_time_thread[tid][n] += grid.costheta_weights[row] * s;
                } else {
                    tacc.push_back(s);
                }
            }
        }
        if (mixed && inner_var == Var::Time) {
            // outer spatial integral of the inner time norm
            double s = 0.0;
            for (std::size_t j = 0; j < n_phi; ++j)
                s += std::pow(inner_phi[j], outer_p / inner_p);
            row_vals[row] = s * wphi;
        } else if (!(mixed && inner_var == Var::Space)) {
            row_vals[row] = wt * quadrature::pairwise_sum(tacc);
        }
    });

    if (mixed && inner_var == Var::Space) {
        std::vector<double> per_t(n_ts, 0.0);
        for (const auto& v : per_time_thread)
            for (std::size_t n = 0; n < n_ts; ++n) per_t[n] += v[n];
        double s = 0.0;
        for (std::size_t n = 0; n < n_ts; ++n)
            s += wt * std::pow(per_t[n], outer_p / inner_p);
        *mixed_result = std::pow(s, 1.0 / outer_p);
        return 0.0;
    }

    std::vector<double> weighted(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i)
        weighted[i] = grid.costheta_weights[i] * row_vals[i];
    const double total = quadrature::pairwise_sum(weighted);
    if (mixed) {
        *mixed_result = std::pow(total, 1.0 / outer_p);
        return 0.0;
    }
    return total;
}

}  // namespace

double spacetime_norm(const SpaceTimeField& u, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("spacetime_norm: q must be >= 1");
    if (!u.zonal()) {
        const double integral =
            modal_spacetime_integral(u, q, Var::Time, q, q, false, nullptr);
        return std::pow(integral, 1.0 / q);
    }
    const std::size_t n_rows = u.grid.costheta_nodes.size();
    std::vector<double> row_vals(n_rows);
    std::vector<std::unique_ptr<InverseFft>> ffts;
    const int nth = std::max(u.n_threads, 1);
    for (int t = 0; t < nth; ++t) ffts.push_back(std::make_unique<InverseFft>(u.grid.n_t));
    std::vector<std::vector<double>> scratch(nth);

    for_each_row(n_rows, u.n_threads, [&](std::size_t row, int tid) {
        row_vals[row] = u.grid.costheta_weights[row] *
                        zonal_row_power_sum(u, *ffts[tid], scratch[tid], row, q);
    });
    const double integral = kTwoPi * u.grid.time_weight() * quadrature::pairwise_sum(row_vals);
    return std::pow(integral, 1.0 / q);
}

double spacetime_norm_unit_interval(const SpaceTimeField& u, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("spacetime_norm_unit_interval: q must be >= 1");
    if (!u.zonal())
        throw std::invalid_argument("spacetime_norm_unit_interval: zonal fields only");
    const std::size_t n_rows = u.grid.costheta_nodes.size();
    const std::size_t n_t = u.grid.n_t;
    const double dt = u.grid.time_weight();
    // last node with t_n <= 1
    const std::size_t n_keep =
        std::min(n_t - 1, static_cast<std::size_t>(std::floor(1.0 / dt)));
    std::vector<double> row_vals(n_rows);
    InverseFft fft(n_t);
    std::vector<double> powers(n_t);
    for (std::size_t row = 0; row < n_rows; ++row) {
        const auto amps = zonal_row_amplitudes(u.zonal_source(), u.grid.costheta_nodes[row]);
        fft.clear();
        for (int k : u.levels) fft.data()[time_frequency(k) % n_t] += amps[k];
        fft.execute();
        const Complex* s = fft.data();
        for (std::size_t n = 0; n <= n_keep; ++n) powers[n] = power_abs(s[n], q);
        powers[0] *= 0.5;
        powers[n_keep] *= 0.5;
        row_vals[row] =
            u.grid.costheta_weights[row] *
            quadrature::pairwise_sum(std::span<const double>(powers.data(), n_keep + 1));
    }
    const double integral = kTwoPi * dt * quadrature::pairwise_sum(row_vals);
    return std::pow(integral, 1.0 / q);
}

double mixed_norm(const SpaceTimeField& u, Var inner_var, double inner_p,
                  Var outer_var, double outer_p) {
    if (!(inner_p >= 1.0) || !(outer_p >= 1.0))
        throw std::invalid_argument("mixed_norm: exponents must be >= 1");
    if (inner_var == outer_var)
        throw std::invalid_argument("mixed_norm: inner and outer variables must differ");
    if (!u.zonal()) {
        double result = 0.0;
        modal_spacetime_integral(u, inner_p, inner_var, inner_p, outer_p, true, &result);
        return result;
    }

    const std::size_t n_rows = u.grid.costheta_nodes.size();
    const std::size_t n_t = u.grid.n_t;
    const double wt = u.grid.time_weight();
    const int nth = std::max(u.n_threads, 1);
    std::vector<std::unique_ptr<InverseFft>> ffts;
    for (int t = 0; t < nth; ++t) ffts.push_back(std::make_unique<InverseFft>(n_t));

    if (inner_var == Var::Time) {
        std::vector<double> row_vals(n_rows);
        std::vector<std::vector<double>> scratch(nth);
        for_each_row(n_rows, u.n_threads, [&](std::size_t row, int tid) {
            const double s =
                wt * zonal_row_power_sum(u, *ffts[tid], scratch[tid], row, inner_p);
            row_vals[row] = u.grid.costheta_weights[row] * std::pow(s, outer_p / inner_p);
        });
        const double outer = kTwoPi * quadrature::pairwise_sum(row_vals);
        return std::pow(outer, 1.0 / outer_p);
    }

    // inner spatial norm per time node, outer in time
    std::vector<std::vector<double>> per_t_thread(nth);
    for (auto& v : per_t_thread) v.assign(n_t, 0.0);
    for_each_row(n_rows, u.n_threads, [&](std::size_t row, int tid) {
        auto& fft = *ffts[tid];
        const auto amps = zonal_row_amplitudes(u.zonal_source(), u.grid.costheta_nodes[row]);
        fft.clear();
        for (int k : u.levels) fft.data()[time_frequency(k) % n_t] += amps[k];
        fft.execute();
        const Complex* s = fft.data();
        const double w = u.grid.costheta_weights[row];
        auto& acc = per_t_thread[tid];
        for (std::size_t n = 0; n < n_t; ++n) acc[n] += w * power_abs(s[n], inner_p);
    });
    std::vector<double> terms(n_t);
    for (std::size_t n = 0; n < n_t; ++n) {
        double v = 0.0;
        for (const auto& acc : per_t_thread) v += acc[n];
        terms[n] = wt * std::pow(kTwoPi * v, outer_p / inner_p);
    }
    return std::pow(quadrature::pairwise_sum(terms), 1.0 / outer_p);
}

double unitarity_deviation(const SpaceTimeField& u) {
    const double ref = u.source_l2();
    if (u.zonal()) {
        const std::size_t n_t = u.grid.n_t;
        const std::size_t n_rows = u.grid.costheta_nodes.size();
        const int nth = std::max(u.n_threads, 1);
        std::vector<std::unique_ptr<InverseFft>> ffts;
        for (int t = 0; t < nth; ++t) ffts.push_back(std::make_unique<InverseFft>(n_t));
        std::vector<std::vector<double>> per_t_thread(nth);
        for (auto& v : per_t_thread) v.assign(n_t, 0.0);
        for_each_row(n_rows, u.n_threads, [&](std::size_t row, int tid) {
            auto& fft = *ffts[tid];
            const auto amps = zonal_row_amplitudes(u.zonal_source(), u.grid.costheta_nodes[row]);
            fft.clear();
            for (int k : u.levels) fft.data()[time_frequency(k) % n_t] += amps[k];
            fft.execute();
            const Complex* s = fft.data();
            const double w = u.grid.costheta_weights[row];
            auto& acc = per_t_thread[tid];
            for (std::size_t n = 0; n < n_t; ++n) acc[n] += w * std::norm(s[n]);
        });
        double dev = 0.0;
        for (std::size_t n = 0; n < n_t; ++n) {
            double v = 0.0;
            for (const auto& acc : per_t_thread) v += acc[n];
            dev = std::max(dev, std::abs(std::sqrt(kTwoPi * v) - ref));
        }
        return dev;
    }
    // modal: L2 across the sampled times through the quadrature path
    const std::size_t n_ts = u.modal_time_samples;
    double dev = 0.0;
    const auto& grid = u.grid;
    const auto& f = u.modal_source();
    const std::size_t n_phi = static_cast<std::size_t>(grid.n_phi);
    InverseFft fft(n_phi);
    const int kmax = f.max_degree();
    std::vector<double> per_t(n_ts, 0.0);
    for (std::size_t row = 0; row < grid.costheta_nodes.size(); ++row) {
        const auto tables = modal_row_tables(f, grid.costheta_nodes[row]);
        std::vector<Complex> phase(kmax + 1);
        for (std::size_t n = 0; n < n_ts; ++n) {
            const double t = kPi * static_cast<double>(n) / static_cast<double>(n_ts);
            for (int k : tables.band) {
                const double ang = 2.0 * t * static_cast<double>(time_frequency(k));
                phase[k] = Complex{std::cos(ang), std::sin(ang)};
            }
            fft.clear();
            for (std::size_t mi = 0; mi < tables.per_m.size(); ++mi) {
                Complex h{0.0, 0.0};
                for (const auto& [k, amp] : tables.per_m[mi]) h += amp * phase[k];
                const long m = tables.m_lo + static_cast<long>(mi);
                const std::size_t slot =
                    static_cast<std::size_t>(((m % static_cast<long>(n_phi)) +
                                              static_cast<long>(n_phi)) %
                                             static_cast<long>(n_phi));
                fft.data()[slot] += h;
            }
            fft.execute();
            double s = 0.0;
            for (std::size_t j = 0; j < n_phi; ++j) s += std::norm(fft.data()[j]);
            per_t[n] += grid.costheta_weights[row] * s * grid.phi_weight();
        }
    }
    for (std::size_t n = 0; n < n_ts; ++n)
        dev = std::max(dev, std::abs(std::sqrt(per_t[n]) - ref));
    return dev;
}

namespace {

Complex evaluate_evolved_pole(const ZonalField& f, double t) {
    Complex v{0.0, 0.0};
    for (std::size_t k = 0; k < f.coeff.size(); ++k) {
        const double ang = t * static_cast<double>(k) * (static_cast<double>(k) + 1.0);
        v += f.coeff[k] * std::sqrt((2.0 * k + 1.0) / (4.0 * kPi)) *
             Complex{std::cos(ang), std::sin(ang)};
    }
    return v;
}

Complex evaluate_evolved_point(const ModalField& f, double costheta, double phi, double t) {
    Complex v{0.0, 0.0};
    const int kmax = f.max_degree();
    std::vector<std::vector<double>> col(kmax + 1);
    for (const auto& e : f.entries) {
        const int am = std::abs(e.m);
        if (col[am].empty()) col[am] = harmonics::assoc_legendre_column(kmax, am, costheta);
        const double ang = t * static_cast<double>(e.k) * (static_cast<double>(e.k) + 1.0);
        v += e.c * col[am][e.k - am] *
             std::exp(Complex{0.0, e.m * phi + ang});
    }
    return v;
}

}  // namespace

double periodicity_deviation(const SpaceTimeField& u, int n_samples) {
    double dev = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double t = kPi * (static_cast<double>(i) + 0.37) / n_samples;
        Complex a, b;
        if (u.zonal()) {
            a = evaluate_evolved_pole(u.zonal_source(), t);
            b = evaluate_evolved_pole(u.zonal_source(), t + kPi);
        } else {
            a = evaluate_evolved_point(u.modal_source(), 0.41, 1.3, t);
            b = evaluate_evolved_point(u.modal_source(), 0.41, 1.3, t + kPi);
        }
        dev = std::max(dev, std::abs(a - b));
    }
    return dev;
}

double time_band_leakage(const SpaceTimeField& u) {
    if (!u.zonal())
        throw std::invalid_argument("time_band_leakage: zonal fields only");
    const auto& f = u.zonal_source();
    if (u.levels.empty()) return 0.0;
    const std::size_t nu_max = time_frequency(u.levels.back());
    const std::size_t n = quadrature::next_fast_fft_size(nu_max + 2);
    // synthesize the pole series by direct summation (independent of the FFT
    // path used for norms), then analyze it
    InverseFft fft(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = kPi * static_cast<double>(j) / static_cast<double>(n);
        fft.data()[j] = std::conj(evaluate_evolved_pole(f, t));
    }
    fft.execute();  // backward transform of conjugate = conjugated forward DFT
    std::vector<bool> on_bin(n, false);
    for (int k : u.levels) on_bin[time_frequency(k) % n] = true;
    double off = 0.0, total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double e = std::norm(fft.data()[j]);
        total += e;
        if (!on_bin[j]) off += e;
    }
    return total > 0.0 ? off / total : 0.0;
}

double l4_integral_autocorrelation(const SpaceTimeField& u) {
    if (!u.zonal())
        throw std::invalid_argument("l4_integral_autocorrelation: zonal fields only");
    const auto& grid = u.grid;
    const std::size_t n_rows = grid.costheta_nodes.size();
    const std::size_t nu_max = u.levels.empty() ? 0 : time_frequency(u.levels.back());
    std::vector<double> row_vals(n_rows);
    std::vector<Complex> conv(2 * nu_max + 1);

    for (std::size_t row = 0; row < n_rows; ++row) {
        const auto amps = zonal_row_amplitudes(u.zonal_source(), grid.costheta_nodes[row]);
        std::fill(conv.begin(), conv.end(), Complex{0.0, 0.0});
        // u^2 has spectrum sum_{nu_k + nu_l = sigma} A_k A_l: group pairs by
        // the level sets k(k+1) + l(l+1) = const
        for (int k : u.levels)
            for (int l : u.levels)
                conv[time_frequency(k) + time_frequency(l)] += amps[k] * amps[l];
        double s = 0.0;
        for (const auto& c : conv) s += std::norm(c);
        row_vals[row] = grid.costheta_weights[row] * kPi * s;
    }
    return kTwoPi * quadrature::pairwise_sum(row_vals);
}

double l4_integral_quadrature(const SpaceTimeField& u) {
    const double nrm = spacetime_norm(u, 4.0);
    return nrm * nrm * nrm * nrm;
}

PeakReport peak_persistence(double lambda, const tiling::SmoothBump& bump,
                            double delta, int n_samples) {
    if (!(delta > 0.0)) throw std::invalid_argument("peak_persistence: delta must be positive");
    const auto f = harmonics::cluster_kernel(lambda, bump);
    PeakReport r;
    r.peak_value = std::abs(evaluate_evolved_pole(f, 0.0));
    if (r.peak_value == 0.0) return r;
    const double t_max = delta / (lambda * lambda);
    double min_ratio = 1.0;
    for (int i = 0; i < n_samples; ++i) {
        const double t = -t_max + 2.0 * t_max * static_cast<double>(i) / (n_samples - 1);
        min_ratio = std::min(min_ratio, std::abs(evaluate_evolved_pole(f, t)) / r.peak_value);
    }
    r.min_ratio = min_ratio;
    return r;
}

}  // namespace zoll::evolution
