#pragma once

#include <cstdint>
#include <stdexcept>

#include "srlab/timeseries.hpp"

namespace srlab::detectors {

enum class Kind {
    discrete_symmetric,
    discrete_asymmetric,
    continuous_symmetric,
    continuous_asymmetric,
    lif,
};

struct DetectorSpec {
    Kind kind = Kind::discrete_symmetric;
    double theta = 1.1;   // detection threshold, > 0
    double tau_m = 1.0;   // membrane time constant (lif only)
    double dt = 0.01;     // integration step (lif only)
    double x_rest = 0.0;  // resting potential (lif only)

    void validate() const {
        if (theta <= 0.0)
            throw std::invalid_argument("DetectorSpec: theta must be > 0");
        if (kind == Kind::lif) {
            if (tau_m <= 0.0)
                throw std::invalid_argument("DetectorSpec: tau_m must be > 0");
            if (dt <= 0.0)
                throw std::invalid_argument("DetectorSpec: dt must be > 0");
        }
    }
};

Kind kind_from_string(const std::string& name);
std::string kind_to_string(Kind kind);

// Per-sample transfer of s_t + n_t. The discrete_symmetric detector draws a
// seeded coin for sub-threshold samples; all other kinds ignore the seed.
TimeSeries apply_memoryless(const DetectorSpec& spec, const TimeSeries& signal,
                            const TimeSeries& noise, std::uint64_t seed);

// Leaky integrator driven by s_t + n_t; emits 1 at the first sample where
// the membrane reaches theta, then resets to x_rest.
TimeSeries run_lif(const DetectorSpec& spec, const TimeSeries& signal,
                   const TimeSeries& noise);

}  // namespace srlab::detectors
