#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srlab/detectors.hpp"
#include "srlab/objectives.hpp"
#include "srlab/signals.hpp"
#include "srlab/timeseries.hpp"

namespace srlab::resonance {

// Declarative signal description, so sweeps can regenerate the input per
// replicate from derived seeds.
struct SignalSpec {
    enum class Type { bipolar, sine, roessler, ou, audio };
    Type type = Type::bipolar;

    double persist_prob = 0.7;  // bipolar

    double freq = 0.05;  // sine (cycles per sample when dt = 1)
    double amplitude = 1.0;
    double dt = 1.0;

    signals::RoesslerParams roessler;
    signals::OuParams ou;
    std::string audio_path;

    // When > 0, rescale the generated series so max |sample| equals this;
    // sets the signal-to-threshold distance against the detector theta.
    double normalize_to = 0.0;
};

SignalSpec::Type signal_type_from_string(const std::string& name);
std::string signal_type_to_string(SignalSpec::Type type);

// Generate n samples; seed only affects the stochastic signal types.
TimeSeries make_signal(const SignalSpec& spec, std::size_t n,
                       std::uint64_t seed);

struct ObjectiveSelect {
    bool mi = true, cc = true, ac = true, q = true, snr = true;
};

struct SweepConfig {
    SignalSpec signal;
    detectors::DetectorSpec detector;
    std::vector<double> sigma_grid;
    std::size_t samples_per_point = 100000;
    std::size_t replicates = 1;
    std::uint64_t master_seed = 1;
    std::vector<std::size_t> ac_lags = {1};
    double stimulus_freq = 0.0;  // > 0 enables SNR (periodic input only)
    objectives::BinningSpec binning;
    ObjectiveSelect select;

    void validate() const;
};

struct CurvePoint {
    double sigma = 0.0;
    objectives::ObjectiveSample mean;
    objectives::ObjectiveSample std_error;
    std::size_t replicates = 0;
};

struct ResonanceCurve {
    std::vector<CurvePoint> points;
    SweepConfig config;
};

// Evaluate every sigma_grid point; deterministic for fixed master_seed and
// independent of the thread count (per-point seed derivation).
ResonanceCurve run_sweep(const SweepConfig& config, unsigned threads = 1);

struct Optimum {
    double sigma = 0.0;
    double value = 0.0;
    bool boundary = false;  // argmax at an end of the grid
};

// objective is one of: mi, cc, ac, ac_rms, q, snr. The ac objectives are
// maximized in absolute value; ties break toward smaller sigma.
Optimum find_optimum(const ResonanceCurve& curve, const std::string& objective);

struct ScatterPair {
    std::string config_id;
    double sigma_mi = 0.0;
    double sigma_ac = 0.0;
    bool boundary = false;
};

struct ScatterStudy {
    std::vector<ScatterPair> pairs;
    double r = 0.0;
    bool degenerate = false;  // pearson_r had zero variance
};

// Per config: run_sweep, locate the MI and |AC| optima, correlate them.
ScatterStudy run_scatter_study(const std::vector<SweepConfig>& configs,
                               const std::string& ac_objective = "ac",
                               unsigned threads = 1);

struct ControllerState {
    double sigma = 0.1;
    double ac_estimate = 0.0;
    double step = 0.1;
    std::size_t iteration = 0;
    std::size_t window = 10000;
    std::size_t degenerate_count = 0;
};

// One stochastic hill-climbing update: probe |AC| of the detector output at
// sigma and sigma + step on the same window with common random numbers,
// move uphill, decay the step by 0.95 (floor 1e-3).
ControllerState adapt_step(const ControllerState& state,
                           const TimeSeries& signal_window,
                           const detectors::DetectorSpec& detector,
                           std::uint64_t seed);

struct ControllerParams {
    double sigma0 = 0.1;
    double step0 = 0.2;
    std::size_t iterations = 200;
    std::size_t window = 10000;
};

// Drive adapt_step with a fresh signal window per iteration; returns the
// state after every iteration (trajectory[0] is post-iteration-1).
std::vector<ControllerState> run_controller(
    const SignalSpec& signal, const detectors::DetectorSpec& detector,
    const ControllerParams& params, std::uint64_t master_seed);

}  // namespace srlab::resonance
