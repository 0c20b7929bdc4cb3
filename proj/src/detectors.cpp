#include "srlab/detectors.hpp"

#include <cmath>

#include "srlab/kernels.hpp"
#include "srlab/rng.hpp"

namespace srlab::detectors {

Kind kind_from_string(const std::string& name) {
    if (name == "discrete_symmetric") return Kind::discrete_symmetric;
    if (name == "discrete_asymmetric") return Kind::discrete_asymmetric;
    if (name == "continuous_symmetric") return Kind::continuous_symmetric;
    if (name == "continuous_asymmetric") return Kind::continuous_asymmetric;
    if (name == "lif") return Kind::lif;
    throw std::invalid_argument("unknown detector kind: " + name);
}

std::string kind_to_string(Kind kind) {
    switch (kind) {
        case Kind::discrete_symmetric: return "discrete_symmetric";
        case Kind::discrete_asymmetric: return "discrete_asymmetric";
        case Kind::continuous_symmetric: return "continuous_symmetric";
        case Kind::continuous_asymmetric: return "continuous_asymmetric";
        case Kind::lif: return "lif";
    }
    return "?";
}

TimeSeries apply_memoryless(const DetectorSpec& spec, const TimeSeries& signal,
                            const TimeSeries& noise, std::uint64_t seed) {
    spec.validate();
    if (spec.kind == Kind::lif)
        throw std::invalid_argument(
            "apply_memoryless: lif detector requires run_lif");
    if (signal.size() != noise.size())
        throw std::invalid_argument(
            "apply_memoryless: signal/noise length mismatch");

    const std::size_t n = signal.size();
    const auto& k = kernels::active();
    std::vector<double> input(n);
    k.scaled_add(signal.data(), noise.data(), 1.0, input.data(), n);

    std::vector<double> out(n);
    switch (spec.kind) {
        case Kind::continuous_symmetric:
            k.deadzone_symmetric(input.data(), spec.theta, out.data(), n);
            break;
        case Kind::continuous_asymmetric:
            k.deadzone_asymmetric(input.data(), spec.theta, out.data(), n);
            break;
        case Kind::discrete_symmetric: {
            // One coin per sample (drawn even when unused) keeps the stream
            // aligned across noise levels, so paired runs with a shared seed
            // differ only where the detection outcome itself changes.
            Rng rng(seed);
            for (std::size_t i = 0; i < n; ++i) {
                const double coin = rng.sign();
                if (input[i] > spec.theta)
                    out[i] = 1.0;
                else if (input[i] < -spec.theta)
                    out[i] = -1.0;
                else
                    out[i] = coin;
            }
            break;
        }
        case Kind::discrete_asymmetric:
            // Event/no-event alphabet {0, 1}.
            for (std::size_t i = 0; i < n; ++i)
                out[i] = input[i] >= spec.theta ? 1.0 : 0.0;
            break;
        case Kind::lif:
            break;  // unreachable
    }
    return TimeSeries(std::move(out), signal.dt,
                      kind_to_string(spec.kind) + "_output");
}

TimeSeries run_lif(const DetectorSpec& spec, const TimeSeries& signal,
                   const TimeSeries& noise) {
    spec.validate();
    if (spec.kind != Kind::lif)
        throw std::invalid_argument("run_lif: spec.kind must be lif");
    if (signal.size() != noise.size())
        throw std::invalid_argument("run_lif: signal/noise length mismatch");

    const std::size_t n = signal.size();
    // Exact exponential update for piecewise-constant input over one step.
    const double decay = std::exp(-spec.dt / spec.tau_m);
    const double gain = spec.tau_m * (1.0 - decay);

    std::vector<double> out(n, 0.0);
    double x = spec.x_rest;
    for (std::size_t i = 0; i < n; ++i) {
        x = x * decay + (signal[i] + noise[i]) * gain;
        if (x >= spec.theta) {
            out[i] = 1.0;
            x = spec.x_rest;
        }
    }
    return TimeSeries(std::move(out), signal.dt, "lif_spikes");
}

}  // namespace srlab::detectors
