#include "srlab/kernels.hpp"

#include <cmath>

namespace srlab::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void scaled_add_scalar(const double* x, const double* y, double a, double* out,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}

void deadzone_symmetric_scalar(const double* x, double theta, double* out,
                               std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        if (v > theta)
            out[i] = v - theta;
        else if (v < -theta)
            out[i] = v + theta;
        else
            out[i] = 0.0;
    }
}

void deadzone_asymmetric_scalar(const double* x, double theta, double* out,
                                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        out[i] = v >= theta ? v - theta : 0.0;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        "scalar",        sum_scalar,
        dot_scalar,      scaled_add_scalar,
        deadzone_symmetric_scalar, deadzone_asymmetric_scalar,
    };
    return ops;
}

}  // namespace srlab::kernels
