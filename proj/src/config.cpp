#include "srlab/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

namespace srlab::config {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
}

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    if (!obj.is_object())
        throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            throw ConfigError(where + ": unknown key '" + key + "'");
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("bad value for '" + key + "': " + e.what());
    }
}

resonance::SignalSpec parse_signal(const json& j) {
    check_keys(j, "signal",
               {"type", "persist_prob", "freq", "amplitude", "dt",
                "normalize_to", "roessler", "ou", "path"});
    resonance::SignalSpec spec;
    if (!j.contains("type")) throw ConfigError("signal: missing 'type'");
    spec.type = resonance::signal_type_from_string(j.at("type").get<std::string>());
    spec.persist_prob = get_or(j, "persist_prob", spec.persist_prob);
    spec.freq = get_or(j, "freq", spec.freq);
    spec.amplitude = get_or(j, "amplitude", spec.amplitude);
    spec.dt = get_or(j, "dt", spec.dt);
    spec.normalize_to = get_or(j, "normalize_to", spec.normalize_to);
    spec.audio_path = get_or<std::string>(j, "path", "");
    if (j.contains("roessler")) {
        const json& r = j.at("roessler");
        check_keys(r, "signal.roessler",
                   {"a", "b", "c", "dt", "x0", "y0", "z0", "transient_steps"});
        spec.roessler.a = get_or(r, "a", spec.roessler.a);
        spec.roessler.b = get_or(r, "b", spec.roessler.b);
        spec.roessler.c = get_or(r, "c", spec.roessler.c);
        spec.roessler.dt = get_or(r, "dt", spec.roessler.dt);
        spec.roessler.x0 = get_or(r, "x0", spec.roessler.x0);
        spec.roessler.y0 = get_or(r, "y0", spec.roessler.y0);
        spec.roessler.z0 = get_or(r, "z0", spec.roessler.z0);
        spec.roessler.transient_steps =
            get_or(r, "transient_steps", spec.roessler.transient_steps);
    }
    if (j.contains("ou")) {
        const json& o = j.at("ou");
        check_keys(o, "signal.ou", {"tau", "eps", "dt", "initial_x"});
        spec.ou.tau = get_or(o, "tau", spec.ou.tau);
        spec.ou.eps = get_or(o, "eps", spec.ou.eps);
        spec.ou.dt = get_or(o, "dt", spec.ou.dt);
        spec.ou.initial_x = get_or(o, "initial_x", spec.ou.initial_x);
    }
    if (spec.type == resonance::SignalSpec::Type::audio && spec.audio_path.empty())
        throw ConfigError("signal: audio type requires 'path'");
    return spec;
}

detectors::DetectorSpec parse_detector(const json& j) {
    check_keys(j, "detector", {"kind", "theta", "tau_m", "dt", "x_rest"});
    detectors::DetectorSpec spec;
    if (!j.contains("kind")) throw ConfigError("detector: missing 'kind'");
    spec.kind = detectors::kind_from_string(j.at("kind").get<std::string>());
    spec.theta = get_or(j, "theta", spec.theta);
    spec.tau_m = get_or(j, "tau_m", spec.tau_m);
    spec.dt = get_or(j, "dt", spec.dt);
    spec.x_rest = get_or(j, "x_rest", spec.x_rest);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

void parse_sweep_section(const json& j, resonance::SweepConfig& cfg) {
    check_keys(j, "sweep",
               {"sigma_grid", "sigma_from", "sigma_to", "sigma_points",
                "samples_per_point", "replicates", "seed", "ac_lags",
                "stimulus_freq", "bins", "objectives"});
    if (j.contains("sigma_grid")) {
        cfg.sigma_grid = j.at("sigma_grid").get<std::vector<double>>();
    } else if (j.contains("sigma_from") && j.contains("sigma_to") &&
               j.contains("sigma_points")) {
        const double lo = j.at("sigma_from").get<double>();
        const double hi = j.at("sigma_to").get<double>();
        const auto k = j.at("sigma_points").get<std::size_t>();
        if (k < 2 || hi <= lo)
            throw ConfigError("sweep: need sigma_points >= 2 and sigma_to > sigma_from");
        cfg.sigma_grid.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            cfg.sigma_grid[i] =
                lo + (hi - lo) * static_cast<double>(i) / (static_cast<double>(k) - 1.0);
    } else {
        throw ConfigError(
            "sweep: need either 'sigma_grid' or sigma_from/sigma_to/sigma_points");
    }
    cfg.samples_per_point = get_or(j, "samples_per_point", cfg.samples_per_point);
    cfg.replicates = get_or(j, "replicates", cfg.replicates);
    cfg.master_seed = get_or(j, "seed", cfg.master_seed);
    cfg.ac_lags = get_or(j, "ac_lags", cfg.ac_lags);
    cfg.stimulus_freq = get_or(j, "stimulus_freq", cfg.stimulus_freq);
    cfg.binning.bins = get_or(j, "bins", cfg.binning.bins);
    if (j.contains("objectives")) {
        cfg.select = {false, false, false, false, false};
        for (const auto& name : j.at("objectives").get<std::vector<std::string>>()) {
            if (name == "mi") cfg.select.mi = true;
            else if (name == "cc") cfg.select.cc = true;
            else if (name == "ac") cfg.select.ac = true;
            else if (name == "q") cfg.select.q = true;
            else if (name == "snr") cfg.select.snr = true;
            else throw ConfigError("sweep: unknown objective '" + name + "'");
        }
    }
}

resonance::SweepConfig parse_sweep_config(const json& j,
                                          const std::string& where) {
    check_keys(j, where, {"signal", "detector", "sweep", "controller", "output"});
    if (!j.contains("signal")) throw ConfigError(where + ": missing 'signal'");
    if (!j.contains("detector")) throw ConfigError(where + ": missing 'detector'");
    if (!j.contains("sweep")) throw ConfigError(where + ": missing 'sweep'");
    resonance::SweepConfig cfg;
    cfg.signal = parse_signal(j.at("signal"));
    cfg.detector = parse_detector(j.at("detector"));
    parse_sweep_section(j.at("sweep"), cfg);
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

}  // namespace

Experiment load_experiment(const std::string& path) {
    const json j = load_json(path);
    Experiment exp;
    exp.sweep = parse_sweep_config(j, "config");
    if (j.contains("controller")) {
        const json& c = j.at("controller");
        check_keys(c, "controller",
                   {"sigma0", "step0", "iterations", "window", "seed"});
        exp.controller.sigma0 = get_or(c, "sigma0", exp.controller.sigma0);
        exp.controller.step0 = get_or(c, "step0", exp.controller.step0);
        exp.controller.iterations = get_or(c, "iterations", exp.controller.iterations);
        exp.controller.window = get_or(c, "window", exp.controller.window);
        exp.controller_seed = get_or(c, "seed", exp.controller_seed);
        exp.has_controller = true;
        if (exp.controller.sigma0 < 0.0 || exp.controller.step0 <= 0.0)
            throw ConfigError("controller: need sigma0 >= 0 and step0 > 0");
    }
    return exp;
}

Study load_study(const std::string& path) {
    const json j = load_json(path);
    check_keys(j, "study", {"configs", "ac_objective"});
    if (!j.contains("configs")) throw ConfigError("study: missing 'configs'");
    Study study;
    study.ac_objective = get_or<std::string>(j, "ac_objective", study.ac_objective);
    const json& arr = j.at("configs");
    if (!arr.is_array()) throw ConfigError("study: 'configs' must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
        study.configs.push_back(
            parse_sweep_config(arr[i], "configs[" + std::to_string(i) + "]"));
    if (study.configs.size() < 3)
        throw ConfigError("study: need at least 3 configs");
    return study;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0.000000";
    const int exponent =
        static_cast<int>(std::floor(std::log10(std::abs(v))));
    int decimals = 5 - exponent;
    decimals = std::min(std::max(decimals, 0), 12);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

}  // namespace srlab::config
