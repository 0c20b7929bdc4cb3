#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "srlab/analytic.hpp"
#include "srlab/config.hpp"
#include "srlab/resonance.hpp"

namespace {

using srlab::config::format_number;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // '\n' endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SRLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              std::optional<std::uint64_t> seed, unsigned threads) {
    auto exp = srlab::config::load_experiment(config_path);
    if (seed) exp.sweep.master_seed = *seed;
    const auto curve = srlab::resonance::run_sweep(exp.sweep, threads);

    auto out = open_output(out_path);
    out << "sigma,mi,ac,cc,q,snr,mi_se,ac_se\n";
    for (const auto& pt : curve.points) {
        out << format_number(pt.sigma) << ',' << format_number(pt.mean.mi_bits)
            << ',' << format_number(pt.mean.ac_lag1) << ','
            << format_number(pt.mean.cc) << ','
            << (pt.mean.q_hat ? format_number(*pt.mean.q_hat) : "") << ','
            << (pt.mean.snr_db ? format_number(*pt.mean.snr_db) : "") << ','
            << format_number(pt.std_error.mi_bits) << ','
            << format_number(pt.std_error.ac_lag1) << '\n';
    }
    return kExitOk;
}

int cmd_analytic(double theta, double q, double sigma_from, double sigma_to,
                 std::size_t points, const std::string& out_path) {
    namespace an = srlab::analytic;
    if (theta <= 1.0) {
        std::cerr << "analytic: theta must be > 1\n";
        return kExitConfig;
    }
    if (points < 2 || sigma_to <= sigma_from || sigma_from < 0.0) {
        std::cerr << "analytic: bad sigma range\n";
        return kExitConfig;
    }
    const double c_ss = an::input_ac_bipolar(q);
    auto out = open_output(out_path);
    out << "sigma,q_analytic,mi_analytic,ac_analytic,cc_analytic\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double sigma = sigma_from + (sigma_to - sigma_from) *
                                              static_cast<double>(i) /
                                              (static_cast<double>(points) - 1.0);
        const double qs = an::analytic_q(theta, sigma);
        out << format_number(sigma) << ',' << format_number(qs) << ','
            << format_number(an::analytic_mi(qs)) << ','
            << format_number(an::analytic_ac(qs, c_ss)) << ','
            << format_number(an::analytic_cc(qs)) << '\n';
    }
    return kExitOk;
}

int cmd_scatter(const std::string& config_path, const std::string& out_path,
                std::optional<std::uint64_t> seed, unsigned threads) {
    auto study = srlab::config::load_study(config_path);
    if (seed)
        for (auto& cfg : study.configs) cfg.master_seed = *seed;
    const auto result = srlab::resonance::run_scatter_study(
        study.configs, study.ac_objective, threads);

    auto out = open_output(out_path);
    out << "config_id,sigma_mi,sigma_ac,boundary_flag\n";
    for (const auto& pair : result.pairs)
        out << pair.config_id << ',' << format_number(pair.sigma_mi) << ','
            << format_number(pair.sigma_ac) << ',' << (pair.boundary ? 1 : 0)
            << '\n';
    out << "# pearson_r=" << format_number(result.r) << '\n';
    if (result.degenerate)
        std::cerr << "warning: degenerate variance in optimum pairs, "
                     "pearson_r undefined\n";
    return kExitOk;
}

int cmd_adapt(const std::string& config_path, const std::string& out_path,
              std::optional<std::uint64_t> seed) {
    auto exp = srlab::config::load_experiment(config_path);
    const std::uint64_t master = seed ? *seed : exp.controller_seed;
    const auto trajectory = srlab::resonance::run_controller(
        exp.sweep.signal, exp.sweep.detector, exp.controller, master);

    auto out = open_output(out_path);
    out << "iter,sigma,ac_estimate,step\n";
    for (const auto& state : trajectory)
        out << state.iteration << ',' << format_number(state.sigma) << ','
            << format_number(state.ac_estimate) << ','
            << format_number(state.step) << '\n';
    if (!trajectory.empty())
        out << "# final_sigma=" << format_number(trajectory.back().sigma)
            << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive stochastic resonance toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    app.add_option("--seed", seed, "Override config seeds");
    app.add_option("--threads", threads,
                   "Worker threads (default: SRLAB_THREADS or 1)");

    auto* sweep = app.add_subcommand("sweep", "Noise-intensity resonance sweep");
    sweep->add_option("--config", config_path, "Experiment config (JSON)")
        ->required();
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    double theta = 1.1, q = 0.7, sigma_from = 0.05, sigma_to = 3.0;
    std::size_t points = 60;
    auto* analytic =
        app.add_subcommand("analytic", "Closed-form bipolar-model curves");
    analytic->add_option("--theta", theta, "Threshold (> 1)")->required();
    analytic->add_option("--q", q, "Bipolar persistence probability");
    analytic->add_option("--sigma-from", sigma_from, "Grid start");
    analytic->add_option("--sigma-to", sigma_to, "Grid end");
    analytic->add_option("--sigma-points", points, "Grid size");
    analytic->add_option("--out", out_path, "Output CSV path")->required();

    auto* scatter =
        app.add_subcommand("scatter", "Cross-model optimum scatter study");
    scatter->add_option("--config", config_path, "Study config (JSON)")
        ->required();
    scatter->add_option("--out", out_path, "Output CSV path")->required();

    auto* adapt =
        app.add_subcommand("adapt", "Adaptive AC-feedback noise controller");
    adapt->add_option("--config", config_path, "Experiment config (JSON)")
        ->required();
    adapt->add_option("--out", out_path, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sweep->parsed())
            return cmd_sweep(config_path, out_path, seed, resolve_threads(threads));
        if (analytic->parsed())
            return cmd_analytic(theta, q, sigma_from, sigma_to, points, out_path);
        if (scatter->parsed())
            return cmd_scatter(config_path, out_path, seed,
                               resolve_threads(threads));
        if (adapt->parsed()) return cmd_adapt(config_path, out_path, seed);
    } catch (const srlab::config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitConfig;
}
