#include "srlab/signals.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "srlab/integrate.hpp"
#include "srlab/rng.hpp"

namespace srlab::signals {

TimeSeries gen_bipolar(double persist_prob, std::size_t n, std::uint64_t seed) {
    if (persist_prob < 0.0 || persist_prob > 1.0)
        throw std::invalid_argument("gen_bipolar: persist_prob outside [0,1]");
    if (n == 0) throw std::invalid_argument("gen_bipolar: n must be >= 1");
    Rng rng(seed);
    std::vector<double> s(n);
    s[0] = rng.sign();
    for (std::size_t i = 1; i < n; ++i)
        s[i] = rng.bernoulli(persist_prob) ? s[i - 1] : -s[i - 1];
    return TimeSeries(std::move(s), 1.0, "bipolar");
}

TimeSeries gen_sine(double freq, double amplitude, double dt, std::size_t n) {
    if (freq <= 0.0) throw std::invalid_argument("gen_sine: freq must be > 0");
    if (dt <= 0.0) throw std::invalid_argument("gen_sine: dt must be > 0");
    if (n == 0) throw std::invalid_argument("gen_sine: n must be >= 1");
    std::vector<double> s(n);
    const double w = 2.0 * std::numbers::pi * freq * dt;
    for (std::size_t i = 0; i < n; ++i)
        s[i] = amplitude * std::sin(w * static_cast<double>(i));
    return TimeSeries(std::move(s), dt, "sine");
}

namespace {

using State3 = std::array<double, 3>;

}  // namespace

TimeSeries gen_roessler(const RoesslerParams& params, std::size_t n) {
    if (params.dt <= 0.0)
        throw std::invalid_argument("gen_roessler: dt must be > 0");
    if (n == 0) throw std::invalid_argument("gen_roessler: n must be >= 1");
    State3 u{params.x0, params.y0, params.z0};
    auto rhs = [&params](const State3& v) -> State3 {
        return {-(v[1] + v[2]), v[0] + params.a * v[1],
                params.b + (v[0] - params.c) * v[2]};
    };
    std::vector<double> s;
    s.reserve(n);
    const std::size_t total = params.transient_steps + n;
    for (std::size_t step = 0; step < total; ++step) {
        if (step >= params.transient_steps) s.push_back(u[0]);
        if (s.size() == n) break;
        u = integrate::rk4_step(u, params.dt, rhs);
        if (!std::isfinite(u[0]) || !std::isfinite(u[1]) ||
            !std::isfinite(u[2]))
            throw std::runtime_error(
                "gen_roessler: non-finite state at step " +
                std::to_string(step));
    }
    return TimeSeries(std::move(s), params.dt, "roessler_x");
}

TimeSeries gen_ou(const OuParams& params, std::size_t n, std::uint64_t seed) {
    if (params.tau <= 0.0) throw std::invalid_argument("gen_ou: tau must be > 0");
    if (params.eps < 0.0) throw std::invalid_argument("gen_ou: eps must be >= 0");
    if (params.dt <= 0.0) throw std::invalid_argument("gen_ou: dt must be > 0");
    if (n == 0) throw std::invalid_argument("gen_ou: n must be >= 1");
    Rng rng(seed);
    // Exact one-step conditional distribution of the OU process.
    const double decay = std::exp(-params.dt / params.tau);
    const double step_sd = std::sqrt(params.eps * params.eps * params.tau / 2.0 *
                                     (1.0 - decay * decay));
    std::vector<double> s(n);
    double x = params.initial_x;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = x;
        x = x * decay + step_sd * rng.normal();
    }
    return TimeSeries(std::move(s), params.dt, "ou");
}

TimeSeries gen_gaussian_noise(double sigma, std::size_t n, std::uint64_t seed) {
    if (sigma < 0.0)
        throw std::invalid_argument("gen_gaussian_noise: sigma must be >= 0");
    if (n == 0) throw std::invalid_argument("gen_gaussian_noise: n must be >= 1");
    Rng rng(seed);
    std::vector<double> s(n);
    for (auto& v : s) v = sigma * rng.normal();
    return TimeSeries(std::move(s), 1.0, "gaussian_noise");
}

TimeSeries normalize_amplitude(const TimeSeries& ts, double target_amp) {
    double peak = 0.0;
    for (double v : ts.samples) peak = std::max(peak, std::abs(v));
    if (peak == 0.0)
        throw std::invalid_argument(
            "normalize_amplitude: all-zero input series");
    std::vector<double> s(ts.samples);
    const double scale = target_amp / peak;
    for (auto& v : s) v *= scale;
    return TimeSeries(std::move(s), ts.dt, ts.label + "_norm");
}

namespace {

std::uint32_t read_u32le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (p[1] << 8) | (p[2] << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16le(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

TimeSeries load_audio(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_audio: cannot open " + path);
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(f)),
                                   std::istreambuf_iterator<char>());
    if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
        std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
        throw std::runtime_error("load_audio: not a RIFF/WAVE file: " + path);

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t sample_rate = 0;
    const unsigned char* data = nullptr;
    std::uint32_t data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= buf.size()) {
        const char* id = reinterpret_cast<const char*>(buf.data() + pos);
        const std::uint32_t len = read_u32le(buf.data() + pos + 4);
        if (pos + 8 + len > buf.size()) break;
        if (std::memcmp(id, "fmt ", 4) == 0 && len >= 16) {
            const unsigned char* p = buf.data() + pos + 8;
            format = read_u16le(p);
            channels = read_u16le(p + 2);
            sample_rate = read_u32le(p + 4);
            bits = read_u16le(p + 14);
        } else if (std::memcmp(id, "data", 4) == 0) {
            data = buf.data() + pos + 8;
            data_len = len;
        }
        pos += 8 + len + (len & 1);  // chunks are word-aligned
    }

    if (!data || sample_rate == 0)
        throw std::runtime_error("load_audio: missing fmt/data chunk in " + path);
    if (channels != 1)
        throw std::runtime_error("load_audio: expected mono, file has " +
                                 std::to_string(channels) + " channels");

    std::vector<double> s;
    if (format == 1 && bits == 16) {
        s.reserve(data_len / 2);
        for (std::uint32_t i = 0; i + 2 <= data_len; i += 2) {
            const std::int16_t v =
                static_cast<std::int16_t>(data[i] | (data[i + 1] << 8));
            s.push_back(static_cast<double>(v) / 32767.0);
        }
    } else if (format == 1 && bits == 24) {
        s.reserve(data_len / 3);
        for (std::uint32_t i = 0; i + 3 <= data_len; i += 3) {
            std::int32_t v = data[i] | (data[i + 1] << 8) | (data[i + 2] << 16);
            if (v & 0x800000) v |= ~0xffffff;  // sign extend
            s.push_back(static_cast<double>(v) / 8388607.0);
        }
    } else if (format == 3 && bits == 32) {
        s.reserve(data_len / 4);
        for (std::uint32_t i = 0; i + 4 <= data_len; i += 4) {
            float v;
            std::memcpy(&v, data + i, 4);
            s.push_back(static_cast<double>(v));
        }
    } else {
        throw std::runtime_error(
            "load_audio: unsupported encoding (format tag " +
            std::to_string(format) + ", " + std::to_string(bits) + " bit)");
    }
    if (s.empty()) throw std::runtime_error("load_audio: empty data chunk");
    return TimeSeries(std::move(s), 1.0 / static_cast<double>(sample_rate),
                      "audio:" + path);
}

}  // namespace srlab::signals
