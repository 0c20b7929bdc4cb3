#pragma once

#include <cstdint>
#include <random>

namespace srlab {

// splitmix64 finalizer. Used both as a stream-seed derivation hash and as
// the seeding primitive, so that (master_seed, index...) pairs map to
// statistically independent generator states.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0) {
    return mix64(mix64(mix64(master) ^ a) ^ b);
}

// Seeded stream wrapper. A fresh Rng(seed) is a pure function of its seed;
// distinct derived seeds give independent streams for parallel sweep points.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

    double normal() { return normal_(eng_); }
    double uniform() { return uniform_(eng_); }
    // Fair coin over {-1, +1}.
    double sign() { return (eng_() & 1u) ? 1.0 : -1.0; }
    bool bernoulli(double p) { return uniform_(eng_) < p; }

private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace srlab
