#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srlab/resonance.hpp"

namespace srlab::config {

// Raised for any schema violation (unknown key, bad type, invalid value).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Experiment {
    resonance::SweepConfig sweep;
    resonance::ControllerParams controller;
    std::uint64_t controller_seed = 1;
    bool has_controller = false;
};

struct Study {
    std::vector<resonance::SweepConfig> configs;
    std::string ac_objective = "ac";
};

// Parse an experiment config file (JSON; keys validated strictly).
Experiment load_experiment(const std::string& path);

// Parse a scatter-study config file: {"configs": [...], "ac_objective": "ac"}.
Study load_study(const std::string& path);

// Fixed-notation numeric formatting with 6 significant digits; NaN maps to
// an empty field, infinities to "inf"/"-inf".
std::string format_number(double v);

}  // namespace srlab::config
