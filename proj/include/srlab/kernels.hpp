#pragma once

#include <cstddef>

// Data-parallel inner loops used by the detectors and estimators. Scalar
// reference implementations and AVX2 variants share this signature table;
// the active table is picked once at startup from CPUID. Set
// SRLAB_FORCE_SCALAR=1 in the environment to pin the scalar path.
namespace srlab::kernels {

struct Ops {
    const char* name;
    double (*sum)(const double* x, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    // out[i] = x[i] + a * y[i]
    void (*scaled_add)(const double* x, const double* y, double a, double* out,
                       std::size_t n);
    // Dead-zone transfer: 0 inside (-theta, theta), shifted identity outside.
    void (*deadzone_symmetric)(const double* x, double theta, double* out,
                               std::size_t n);
    // Single-threshold rectifier: 0 below theta, x - theta at or above.
    void (*deadzone_asymmetric)(const double* x, double theta, double* out,
                                std::size_t n);
};

const Ops& scalar_ops();
bool avx2_available();
const Ops& avx2_ops();  // valid only when avx2_available()
const Ops& active();

}  // namespace srlab::kernels
