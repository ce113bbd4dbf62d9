#include "zoll/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "zoll/spectrum.hpp"

namespace zoll::harmonics {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

}  // namespace

std::vector<double> legendre_sequence(int k_max, double x) {
    if (k_max < 0) throw std::invalid_argument("legendre_sequence: k_max must be >= 0");
    if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("legendre_sequence: |x| must be <= 1");
    std::vector<double> p(k_max + 1);
    p[0] = 1.0;
    if (k_max >= 1) p[1] = x;
    for (int k = 2; k <= k_max; ++k)
        p[k] = ((2.0 * k - 1.0) * x * p[k - 1] - (k - 1.0) * p[k - 2]) / k;
    return p;
}

std::vector<double> assoc_legendre_column(int k_max, int m, double x) {
    if (m < 0) throw std::invalid_argument("assoc_legendre_column: m must be >= 0");
    if (k_max < m) return {};
    if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("assoc_legendre_column: |x| must be <= 1");

    const double sine = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    // Seed Pbar_mm = sqrt((2m+1)/(4pi)) * sqrt((2m-1)!!/(2m)!!) * sin^m,
    // accumulated with an exponent counter so sin^m survives m ~ 2^14;
    // the same counter rides through the upward k recurrence so values that
    // grow back into range are recovered, not flushed.
    double mant = 1.0 / std::sqrt(kFourPi);
    int exp2 = 0;
    for (int i = 1; i <= m; ++i) {
        mant *= sine * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
        if (mant != 0.0 && std::abs(mant) < 1e-280) {
            mant = std::ldexp(mant, 980);
            exp2 -= 980;
        }
    }

    std::vector<double> col(k_max - m + 1);
    col[0] = std::ldexp(mant, exp2);
    if (k_max == m) return col;

    double prev2 = mant;                                  // scaled Pbar_{k-2}
    double prev1 = std::sqrt(2.0 * m + 3.0) * x * mant;   // scaled Pbar_{k-1}
    col[1] = std::ldexp(prev1, exp2);
    double a_prev = std::sqrt((4.0 * (m + 1.0) * (m + 1.0) - 1.0) /
                              ((m + 1.0) * (m + 1.0) - m * static_cast<double>(m)));
    for (int k = m + 2; k <= k_max; ++k) {
        const double kk = static_cast<double>(k);
        const double a = std::sqrt((4.0 * kk * kk - 1.0) / (kk * kk - m * static_cast<double>(m)));
        const double cur = a * (x * prev1 - prev2 / a_prev);
        col[k - m] = std::ldexp(cur, exp2);
        prev2 = prev1;
        prev1 = cur;
        a_prev = a;
        if (exp2 < 0 && std::abs(prev1) > 1e280) {
            const int shift = std::min(-exp2, 980);
            prev1 = std::ldexp(prev1, -shift);
            prev2 = std::ldexp(prev2, -shift);
            exp2 += shift;
        }
    }
    return col;
}

Complex ZonalField::evaluate(double costheta) const {
    const int kmax = max_degree();
    if (kmax < 0) return {0.0, 0.0};
    const auto p = legendre_sequence(kmax, costheta);
    Complex v{0.0, 0.0};
    for (int k = 0; k <= kmax; ++k)
        v += coeff[k] * std::sqrt((2.0 * k + 1.0) / kFourPi) * p[k];
    return v;
}

double ZonalField::l2_norm() const {
    double s = 0.0;
    for (const auto& c : coeff) s += std::norm(c);
    return std::sqrt(s);
}

std::vector<int> ZonalField::levels() const {
    std::vector<int> ks;
    for (int k = 0; k <= max_degree(); ++k)
        if (coeff[k] != Complex{0.0, 0.0}) ks.push_back(k);
    return ks;
}

std::string ZonalField::to_json() const {
    nlohmann::json j;
    j["kind"] = "zonal";
    auto& arr = j["coeff"] = nlohmann::json::array();
    for (const auto& c : coeff) arr.push_back({c.real(), c.imag()});
    return j.dump();
}

ZonalField ZonalField::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("kind") != "zonal") throw std::invalid_argument("ZonalField: wrong kind");
    ZonalField f;
    for (const auto& c : j.at("coeff")) f.coeff.emplace_back(c.at(0), c.at(1));
    return f;
}

int ModalField::max_degree() const {
    int kmax = -1;
    for (const auto& e : entries) kmax = std::max(kmax, e.k);
    return kmax;
}

Complex ModalField::evaluate(double costheta, double phi) const {
    Complex v{0.0, 0.0};
    const int kmax = max_degree();
    if (kmax < 0) return v;
    // group by |m| so each associated Legendre column is built once
    std::set<int> ms;
    for (const auto& e : entries) ms.insert(std::abs(e.m));
    for (int m : ms) {
        const auto col = assoc_legendre_column(kmax, m, costheta);
        for (const auto& e : entries) {
            if (std::abs(e.m) != m) continue;
            const double basis = col[e.k - m];
            v += e.c * basis * std::exp(Complex{0.0, e.m * phi});
        }
    }
    return v;
}

double ModalField::l2_norm() const {
    double s = 0.0;
    for (const auto& e : entries) s += std::norm(e.c);
    return std::sqrt(s);
}

std::vector<int> ModalField::levels() const {
    std::set<int> ks;
    for (const auto& e : entries)
        if (e.c != Complex{0.0, 0.0}) ks.insert(e.k);
    return {ks.begin(), ks.end()};
}

std::string ModalField::to_json() const {
    nlohmann::json j;
    j["kind"] = "modal";
    auto& arr = j["entries"] = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back({e.k, e.m, e.c.real(), e.c.imag()});
    return j.dump();
}

ModalField ModalField::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("kind") != "modal") throw std::invalid_argument("ModalField: wrong kind");
    ModalField f;
    for (const auto& e : j.at("entries"))
        f.entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                             Complex{e.at(2).get<double>(), e.at(3).get<double>()}});
    return f;
}

ZonalField zonal_harmonic(int k) {
    if (k < 0) throw std::invalid_argument("zonal_harmonic: degree must be >= 0");
    ZonalField f;
    f.coeff.assign(k + 1, Complex{0.0, 0.0});
    f.coeff[k] = Complex{1.0, 0.0};
    return f;
}

ModalField highest_weight(int k) {
    if (k < 0) throw std::invalid_argument("highest_weight: degree must be >= 0");
    ModalField f;
    f.entries.push_back({k, k, Complex{1.0, 0.0}});
    return f;
}

double highest_weight_log_coeff(int k) {
    // c_k = [2 pi 2^{2k+1} (k!)^2 / (2k+1)!]^{-1/2}
    const double log_norm = std::log(2.0 * std::numbers::pi) +
                            (2.0 * k + 1.0) * std::numbers::ln2 +
                            2.0 * std::lgamma(k + 1.0) - std::lgamma(2.0 * k + 2.0);
    return -0.5 * log_norm;
}

double highest_weight_lq_norm(int k, double q) {
    if (k < 0) throw std::invalid_argument("highest_weight_lq_norm: degree must be >= 0");
    if (q < 0.0) throw std::invalid_argument("highest_weight_lq_norm: q must be >= 0");
    if (q == 0.0) return 1.0;
    // ||Q_k||_q^q = c_k^q * 2 pi * int_0^pi sin^{kq+1}
    const double n = k * q + 1.0;
    const double log_wallis = 0.5 * std::log(std::numbers::pi) +
                              std::lgamma((n + 1.0) / 2.0) - std::lgamma(n / 2.0 + 1.0);
    const double log_norm_q = q * highest_weight_log_coeff(k) +
                              std::log(2.0 * std::numbers::pi) + log_wallis;
    return std::exp(log_norm_q / q);
}

ZonalField cluster_kernel(double lambda, const tiling::SmoothBump& bump) {
    if (!(lambda > 0.0)) throw std::invalid_argument("cluster_kernel: lambda must be positive");
    const auto levels = spectrum::band_levels(
        lambda, [&bump](double s) { return bump(s); }, 2, bump.support_hi);
    ZonalField f;
    const int kmax = levels.empty() ? -1 : levels.back();
    f.coeff.assign(kmax + 1, Complex{0.0, 0.0});
    for (int k : levels) {
        const double b = bump(spectrum::sphere_eigenvalue(2, k) / lambda);
        // raw P_k coefficient lambda^{-1} b (2k+1)/(4pi) divided by the
        // basis normalization sqrt((2k+1)/(4pi))
        f.coeff[k] = Complex{b * std::sqrt((2.0 * k + 1.0) / kFourPi) / lambda, 0.0};
    }
    return f;
}

double weyl_sum(double lambda, const tiling::SmoothBump& bump) {
    const auto levels = spectrum::band_levels(
        lambda, [&bump](double s) { return bump(s); }, 2, bump.support_hi);
    double s = 0.0;
    for (int k : levels)
        s += bump(spectrum::sphere_eigenvalue(2, k) / lambda) * (2.0 * k + 1.0) / kFourPi;
    return s;
}

ModalField random_band_field(double lambda, const tiling::SmoothBump& bump,
                             std::uint64_t seed) {
    const auto levels = spectrum::band_levels(
        lambda, [&bump](double s) { return bump(s); }, 2, bump.support_hi);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ModalField f;
    for (int k : levels) {
        const double b = bump(spectrum::sphere_eigenvalue(2, k) / lambda);
        for (int m = -k; m <= k; ++m) {
            const double re = gauss(rng), im = gauss(rng);
            f.entries.push_back({k, m, b * Complex{re, im}});
        }
    }
    const double n = f.l2_norm();
    if (n > 0.0)
        for (auto& e : f.entries) e.c /= n;
    return f;
}

}  // namespace zoll::harmonics
