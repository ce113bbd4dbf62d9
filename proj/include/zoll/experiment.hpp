#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zoll/exponents.hpp"
#include "zoll/harmonics.hpp"

namespace zoll::experiment {

// Flat record of one experiment; JSON round-trips losslessly so a run can be
// reproduced from its emitted config.
struct ExperimentConfig {
    std::string kind = "fit";      // exponent-table | fit | simulate | count |
                                   // whitney-audit | weyl | circle-baseline
    std::string family = "zonal";  // zonal | highest_weight | cluster_kernel | random
    std::vector<long long> lambdas;
    std::vector<double> qs;
    int dim = 2;
    double oversample = 8.0;
    double delta = 0.1;
    long long alpha = 2;
    double c0 = 1.0;
    long long j = 0;
    double theta0 = 1.0 / 64.0;
    long long samples = 10000;
    std::uint64_t seed = 1;
    std::string out;               // empty = stdout
    bool assert_mode = false;
    double runtime_limit_s = 900.0;
    int n_threads = 1;

    void validate() const;         // throws std::invalid_argument
    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);
};

// Fixed-schema CSV: "# schema <id>" line, a timestamp comment, header row,
// then data rows. Everything except the timestamp line is deterministic.
struct CsvTable {
    std::string schema = "zoll-csv-1";
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& os, bool with_timestamp = true) const;
    std::string body() const;      // deterministic part only
};

struct ExperimentResult {
    CsvTable table;
    std::vector<std::pair<double, exponents::ExponentFit>> fits;  // keyed by q
    bool assert_ok = true;
    std::vector<std::string> messages;
};

// Short fixed-precision number formatting shared by all CSV emission.
std::string format_number(double v);

// Spatial L^q(S^2) norm of a zonal field by Gauss-Legendre quadrature,
// oversampled for fractional q.
double zonal_lq_norm(const harmonics::ZonalField& f, double q);

// One sampled point per lambda for the named family at exponent q:
//   zonal            ||Z_lambda||_{L^q(S^2)}
//   highest_weight   ||Q_lambda||_{L^q(S^2)} (Wallis closed form)
//   cluster_kernel   full-evolution space-time L^q of f_lambda
//   random           sampled-time space-time L^q of a seeded random band field
// rows_out, when given, receives one CSV row per sample.
std::vector<std::pair<double, double>> family_norm_samples(
    const std::string& family, const std::vector<long long>& lambdas, double q,
    double oversample, std::uint64_t seed, int n_threads, CsvTable* rows_out);

// Circle flow modes (k, c) evolving as c e^{ikx + itk^2}.
using CircleModes = std::vector<std::pair<long long, std::complex<double>>>;

// Exact integral of |u|^4 over S^1 x [0, 2pi] via the (k - l, k^2 - l^2)
// level-set autocorrelation; no quadrature grid.
double circle_l4_integral(const CircleModes& modes);

// Seeded random band data on the circle per lambda; fits
// log(||u||_{L^4} / ||f||_{L^2}) against log(lambda).
exponents::ExponentFit circle_baseline(const std::vector<long long>& lambdas,
                                       std::uint64_t seed, CsvTable* rows_out = nullptr);

ExperimentResult run_experiment(const ExperimentConfig& config);

// Process exit code for a finished run under the config's assert mode.
int exit_code(const ExperimentResult& result);

}  // namespace zoll::experiment
