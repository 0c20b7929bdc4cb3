#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srlab {

// Uniformly sampled real-valued series. dt is the sample interval in
// seconds; index-time discrete signals use dt = 1.
struct TimeSeries {
    std::vector<double> samples;
    double dt = 1.0;
    std::string label;

    TimeSeries() = default;
    TimeSeries(std::vector<double> s, double dt_, std::string label_)
        : samples(std::move(s)), dt(dt_), label(std::move(label_)) {
        if (samples.empty())
            throw std::invalid_argument("TimeSeries: empty sample vector");
        if (dt <= 0.0)
            throw std::invalid_argument("TimeSeries: dt must be positive");
    }

    std::size_t size() const { return samples.size(); }
    const double* data() const { return samples.data(); }
    double operator[](std::size_t i) const { return samples[i]; }
};

}  // namespace srlab
