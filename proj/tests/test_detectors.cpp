#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "srlab/analytic.hpp"
#include "srlab/detectors.hpp"
#include "srlab/rng.hpp"
#include "srlab/signals.hpp"

using namespace srlab;
using namespace srlab::detectors;

namespace {

TimeSeries series(std::vector<double> v) {
    return TimeSeries(std::move(v), 1.0, "t");
}

TimeSeries zeros(std::size_t n) { return series(std::vector<double>(n, 0.0)); }

}  // namespace

TEST_CASE("continuous symmetric transfer function") {
    DetectorSpec spec{Kind::continuous_symmetric, 1.0};
    const auto y = apply_memoryless(spec, series({0.5, 1.5, -1.5, 0.0, 3.0}),
                                    zeros(5), 1);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == doctest::Approx(0.5));
    CHECK(y[2] == doctest::Approx(-0.5));
    CHECK(y[3] == 0.0);
    CHECK(y[4] == doctest::Approx(2.0));
}

TEST_CASE("continuous asymmetric transfer function") {
    DetectorSpec spec{Kind::continuous_asymmetric, 1.0};
    const auto y =
        apply_memoryless(spec, series({0.5, 1.0, 1.5, -3.0}), zeros(4), 1);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 0.0);  // at theta: theta - theta
    CHECK(y[2] == doctest::Approx(0.5));
    CHECK(y[3] == 0.0);
}

TEST_CASE("discrete symmetric detector") {
    DetectorSpec spec{Kind::discrete_symmetric, 1.1};
    SUBCASE("supra-threshold samples are deterministic") {
        const auto y = apply_memoryless(spec, series({1.0, -1.0}),
                                        series({0.5, -0.5}), 99);
        CHECK(y[0] == 1.0);
        CHECK(y[1] == -1.0);
    }
    SUBCASE("sub-threshold output is a fair seeded coin") {
        const auto y = apply_memoryless(spec, zeros(100000), zeros(100000), 5);
        double sum = 0.0;
        for (double v : y.samples) {
            CHECK((v == 1.0 || v == -1.0));
            sum += v;
        }
        CHECK(std::abs(sum / 100000.0) < 0.02);
        const auto y2 = apply_memoryless(spec, zeros(100000), zeros(100000), 5);
        CHECK(y.samples == y2.samples);
    }
    SUBCASE("empirical success probability matches the analytic model") {
        const std::size_t n = 1000000;
        const auto s = signals::gen_bipolar(0.7, n, 41);
        for (double sigma : {0.5, 0.85, 1.5}) {
            const auto noise = signals::gen_gaussian_noise(sigma, n, 42);
            const auto y = apply_memoryless(spec, s, noise, 43);
            std::size_t hits = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (y[i] == s[i]) ++hits;
            const double q_emp = static_cast<double>(hits) / n;
            CHECK(std::abs(q_emp - analytic::analytic_q(1.1, sigma)) < 0.01);
        }
    }
}

TEST_CASE("discrete asymmetric detector uses the {0,1} alphabet") {
    DetectorSpec spec{Kind::discrete_asymmetric, 1.0};
    const auto y =
        apply_memoryless(spec, series({0.5, 1.0, 2.0, -5.0}), zeros(4), 1);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 1.0);  // threshold inclusive
    CHECK(y[2] == 1.0);
    CHECK(y[3] == 0.0);
}

TEST_CASE("memoryless detectors commute with index permutation") {
    const std::size_t n = 2000;
    Rng rng(7);
    std::vector<double> s(n), noise(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = 2.0 * rng.uniform() - 1.0;
        noise[i] = rng.normal();
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 eng(3);
    std::shuffle(perm.begin(), perm.end(), eng);

    for (Kind kind : {Kind::continuous_symmetric, Kind::continuous_asymmetric,
                      Kind::discrete_asymmetric}) {
        DetectorSpec spec{kind, 0.8};
        const auto y = apply_memoryless(spec, series(s), series(noise), 1);
        std::vector<double> sp(n), np(n);
        for (std::size_t i = 0; i < n; ++i) {
            sp[i] = s[perm[i]];
            np[i] = noise[perm[i]];
        }
        const auto yp = apply_memoryless(spec, series(sp), series(np), 1);
        for (std::size_t i = 0; i < n; ++i) CHECK(yp[i] == y[perm[i]]);
    }
}

TEST_CASE("symmetric detectors are odd functions of the input") {
    const std::size_t n = 5000;
    Rng rng(13);
    std::vector<double> s(n), noise(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = 3.0 * (rng.uniform() - 0.5);
        noise[i] = rng.normal();
    }
    DetectorSpec spec{Kind::continuous_symmetric, 1.1};
    const auto y = apply_memoryless(spec, series(s), series(noise), 1);
    std::vector<double> sn(n), nn(n);
    for (std::size_t i = 0; i < n; ++i) {
        sn[i] = -s[i];
        nn[i] = -noise[i];
    }
    const auto yn = apply_memoryless(spec, series(sn), series(nn), 1);
    for (std::size_t i = 0; i < n; ++i) CHECK(yn[i] == -y[i]);

    // Distributional oddness for the discrete detector: the supra-threshold
    // outputs flip sign; sub-threshold coins stay fair either way.
    DetectorSpec dspec{Kind::discrete_symmetric, 1.1};
    const auto dy = apply_memoryless(dspec, series(s), series(noise), 1);
    const auto dyn = apply_memoryless(dspec, series(sn), series(nn), 1);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(s[i] + noise[i]) > 1.1) CHECK(dyn[i] == -dy[i]);
}

TEST_CASE("lif neuron") {
    DetectorSpec spec{Kind::lif, 1.0, 1.0, 0.01, 0.0};
    SUBCASE("rest is a fixed point") {
        const auto y = run_lif(spec, zeros(1000), zeros(1000));
        for (double v : y.samples) CHECK(v == 0.0);
    }
    SUBCASE("sub-threshold constant drive never spikes") {
        // Asymptote s*tau_m = 0.9 < theta.
        const auto y =
            run_lif(spec, series(std::vector<double>(5000, 0.9)), zeros(5000));
        for (double v : y.samples) CHECK(v == 0.0);
    }
    SUBCASE("supra-threshold drive fires at the closed-form interval") {
        const double s = 1.5;  // s*tau_m = 1.5 > theta
        const std::size_t n = 100000;
        const auto y =
            run_lif(spec, series(std::vector<double>(n, s)), zeros(n));
        std::vector<std::size_t> spikes;
        for (std::size_t i = 0; i < n; ++i)
            if (y[i] == 1.0) spikes.push_back(i);
        REQUIRE(spikes.size() > 10);
        const double isi_pred =
            spec.tau_m * std::log(s * spec.tau_m / (s * spec.tau_m - spec.theta));
        for (std::size_t k = 1; k < spikes.size(); ++k) {
            const double isi = (spikes[k] - spikes[k - 1]) * spec.dt;
            CHECK(std::abs(isi - isi_pred) <= spec.dt + 1e-12);
        }
    }
    SUBCASE("output is binary and resets below threshold") {
        const std::size_t n = 20000;
        const auto s = signals::gen_sine(0.5, 0.8, 0.01, n);
        const auto noise = signals::gen_gaussian_noise(1.0, n, 3);
        const auto y = run_lif(spec, s, noise);
        for (double v : y.samples) CHECK((v == 0.0 || v == 1.0));
    }
    CHECK_THROWS_AS(run_lif(DetectorSpec{Kind::continuous_symmetric, 1.0},
                            zeros(10), zeros(10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_memoryless(spec, zeros(10), zeros(10), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_memoryless(DetectorSpec{Kind::continuous_symmetric, 1.0},
                                     zeros(10), zeros(9), 1),
                    std::invalid_argument);
}
