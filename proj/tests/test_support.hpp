#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace test_support {

inline void put_u32le(std::ofstream& f, std::uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                 static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
    f.write(b, 4);
}

inline void put_u16le(std::ofstream& f, std::uint16_t v) {
    char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
    f.write(b, 2);
}

// Minimal PCM16 mono WAV writer for fixtures.
inline void write_wav16(const std::string& path,
                        const std::vector<std::int16_t>& samples,
                        std::uint32_t sample_rate, std::uint16_t channels = 1) {
    std::ofstream f(path, std::ios::binary);
    const std::uint32_t data_len =
        static_cast<std::uint32_t>(samples.size() * 2);
    f.write("RIFF", 4);
    put_u32le(f, 36 + data_len);
    f.write("WAVE", 4);
    f.write("fmt ", 4);
    put_u32le(f, 16);
    put_u16le(f, 1);  // PCM
    put_u16le(f, channels);
    put_u32le(f, sample_rate);
    put_u32le(f, sample_rate * channels * 2);
    put_u16le(f, static_cast<std::uint16_t>(channels * 2));
    put_u16le(f, 16);
    f.write("data", 4);
    put_u32le(f, data_len);
    for (std::int16_t s : samples) put_u16le(f, static_cast<std::uint16_t>(s));
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) /
                        (static_cast<double>(n) - 1.0);
    return v;
}

}  // namespace test_support
