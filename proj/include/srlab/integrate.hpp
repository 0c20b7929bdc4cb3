#pragma once

#include <array>
#include <cstddef>

namespace srlab::integrate {

// Classical fourth-order Runge-Kutta step for a fixed-size state vector.
// rhs(state) -> derivative.
template <std::size_t N, typename Rhs>
std::array<double, N> rk4_step(const std::array<double, N>& u, double dt,
                               Rhs&& rhs) {
    auto axpy = [](const std::array<double, N>& x, double h,
                   const std::array<double, N>& d) {
        std::array<double, N> out;
        for (std::size_t i = 0; i < N; ++i) out[i] = x[i] + h * d[i];
        return out;
    };
    const std::array<double, N> k1 = rhs(u);
    const std::array<double, N> k2 = rhs(axpy(u, dt / 2, k1));
    const std::array<double, N> k3 = rhs(axpy(u, dt / 2, k2));
    const std::array<double, N> k4 = rhs(axpy(u, dt, k3));
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = u[i] + dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

}  // namespace srlab::integrate
