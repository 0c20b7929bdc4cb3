#pragma once

#include <cstdint>
#include <string>

#include "srlab/timeseries.hpp"

namespace srlab::signals {

struct RoesslerParams {
    double a = 0.15;
    double b = 0.2;
    double c = 7.1;
    double dt = 0.01;
    double x0 = 1.0, y0 = 1.0, z0 = 1.0;
    std::size_t transient_steps = 10000;
};

struct OuParams {
    double tau = 1.0;   // correlation time, > 0
    double eps = 1.0;   // noise amplitude, >= 0
    double dt = 0.01;
    double initial_x = 0.0;
};

// Correlated bipolar chain over {-1,+1}. persist_prob is the probability
// that successive values are identical; the first sample is +-1 with equal
// probability.
TimeSeries gen_bipolar(double persist_prob, std::size_t n, std::uint64_t seed);

TimeSeries gen_sine(double freq, double amplitude, double dt, std::size_t n);

// x-component of the Roessler system, classical RK4 at fixed dt, with the
// first transient_steps samples discarded.
TimeSeries gen_roessler(const RoesslerParams& params, std::size_t n);

// Ornstein-Uhlenbeck process via the exact conditional-Gaussian update, so
// the stationary variance eps^2*tau/2 holds at any dt.
TimeSeries gen_ou(const OuParams& params, std::size_t n, std::uint64_t seed);

// Mono PCM WAV (16-bit, 24-bit or float32), rescaled to [-1, +1].
TimeSeries load_audio(const std::string& path);

// i.i.d. N(0, sigma^2) samples.
TimeSeries gen_gaussian_noise(double sigma, std::size_t n, std::uint64_t seed);

// Rescale so that max |sample| == target_amp.
TimeSeries normalize_amplitude(const TimeSeries& ts, double target_amp);

}  // namespace srlab::signals
