#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "zoll/experiment.hpp"

namespace {

using zoll::experiment::ExperimentConfig;

struct FlagValues {
    std::string config_path;
    std::string family;
    std::vector<double> qs;
    long long lambda_min = 0, lambda_max = 0;
    int dim = 0;
    long long alpha = -1;
    double c0 = 0.0, delta = 0.0, oversample = 0.0;
    long long seed = -1;
    long long samples = 0;
    long long j = 0;
    bool j_set = false;
    std::string out;
    bool assert_mode = false;
};

void add_common_flags(CLI::App* cmd, FlagValues& v) {
    cmd->add_option("--config", v.config_path, "JSON config file; flags override its values");
    cmd->add_option("--dim", v.dim, "spatial dimension d");
    cmd->add_option("--family", v.family, "data family");
    cmd->add_option("--q", v.qs, "space-time exponent(s)");
    cmd->add_option("--lambda-min", v.lambda_min, "first dyadic frequency");
    cmd->add_option("--lambda-max", v.lambda_max, "last dyadic frequency");
    cmd->add_option("--alpha", v.alpha, "Maslov-type shift for counting");
    cmd->add_option("--c0", v.c0, "annulus window half-width parameter");
    cmd->add_option("--j", v.j, "cell scale index")->each([&](const std::string&) { v.j_set = true; });
    cmd->add_option("--delta", v.delta, "peak persistence time scale");
    cmd->add_option("--oversample", v.oversample, "time quadrature oversampling");
    cmd->add_option("--seed", v.seed, "RNG seed");
    cmd->add_option("--samples", v.samples, "sample/audit count");
    cmd->add_option("--out", v.out, "output CSV path (default stdout)");
    cmd->add_flag("--assert", v.assert_mode, "fail (exit 2) on acceptance-threshold violation");
}

ExperimentConfig build_config(const std::string& kind, const FlagValues& v) {
    ExperimentConfig c;
    if (!v.config_path.empty()) {
        std::ifstream in(v.config_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + v.config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        c = ExperimentConfig::from_json(ss.str());
    }
    c.kind = kind;
    if (!v.family.empty()) c.family = v.family;
    if (!v.qs.empty()) c.qs = v.qs;
    if (v.lambda_min > 0) {
        c.lambdas.clear();
        const long long hi = v.lambda_max > 0 ? v.lambda_max : v.lambda_min;
        for (long long lam = v.lambda_min; lam <= hi; lam *= 2) c.lambdas.push_back(lam);
    }
    if (v.dim > 0) c.dim = v.dim;
    if (v.alpha >= 0) c.alpha = v.alpha;
    if (v.c0 > 0.0) c.c0 = v.c0;
    if (v.j_set) c.j = v.j;
    if (v.delta > 0.0) c.delta = v.delta;
    if (v.oversample > 0.0) c.oversample = v.oversample;
    if (v.seed >= 0) c.seed = static_cast<std::uint64_t>(v.seed);
    if (v.samples > 0) c.samples = v.samples;
    if (!v.out.empty()) c.out = v.out;
    if (v.assert_mode) c.assert_mode = true;
    return c;
}

int run(const ExperimentConfig& config) {
    const auto result = zoll::experiment::run_experiment(config);
    if (config.out.empty()) {
        result.table.write(std::cout);
    } else {
        std::ofstream out(config.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + config.out);
        result.table.write(out);
    }
    for (const auto& m : result.messages) std::cerr << m << "\n";
    for (const auto& [q, fit] : result.fits)
        std::cerr << "fit q=" << zoll::experiment::format_number(q)
                  << " slope=" << zoll::experiment::format_number(fit.slope)
                  << " residual=" << zoll::experiment::format_number(fit.max_residual)
                  << "\n";
    return zoll::experiment::exit_code(result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral experiments for Schrodinger flow on the 2-sphere"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* kind;
        const char* help;
    };
    const Sub subs[] = {
        {"exponents", "exponent-table", "emit the exponent branch table"},
        {"fit", "fit", "family norm sweep with power-law fit"},
        {"simulate", "simulate", "family norm sweep, raw rows only"},
        {"count", "count", "lattice counting profiles"},
        {"whitney", "whitney-audit", "off-diagonal cube pairing audit"},
        {"weyl", "weyl", "pointwise spectral counting sweep"},
        {"baseline-circle", "circle-baseline", "circle flow L4 ratio sweep"},
    };

    std::vector<std::pair<std::string, FlagValues>> pending;
    pending.reserve(std::size(subs));
    for (const auto& s : subs) {
        pending.emplace_back(s.kind, FlagValues{});
        add_common_flags(app.add_subcommand(s.name, s.help), pending.back().second);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // unify usage errors with config errors (exit 1); --help stays 0
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (std::size_t i = 0; i < std::size(subs); ++i) {
            if (app.get_subcommand(subs[i].name)->parsed())
                return run(build_config(pending[i].first, pending[i].second));
        }
        throw std::invalid_argument("no subcommand given");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::length_error& e) {
        std::cerr << "memory budget: " << e.what() << "\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "memory budget: allocation failed\n";
        return 3;
    }
}
