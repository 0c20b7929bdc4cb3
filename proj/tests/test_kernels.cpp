#include <doctest.h>

#include <cmath>
#include <vector>

#include "srlab/kernels.hpp"
#include "srlab/rng.hpp"

using namespace srlab;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = 4.0 * rng.uniform() - 2.0;
    return v;
}

// Odd lengths exercise every remainder path of the vector loops.
const std::size_t kLengths[] = {1, 3, 4, 7, 8, 13, 64, 1001, 4096, 100003};

}  // namespace

TEST_CASE("avx2 reductions match scalar reference") {
    if (!kernels::avx2_available()) return;
    const auto& s = kernels::scalar_ops();
    const auto& v = kernels::avx2_ops();
    for (std::size_t n : kLengths) {
        const auto x = random_vec(n, 11 + n);
        const auto y = random_vec(n, 23 + n);
        const double tol = 1e-12 * static_cast<double>(n) + 1e-13;
        CHECK(std::abs(s.sum(x.data(), n) - v.sum(x.data(), n)) <= tol);
        CHECK(std::abs(s.dot(x.data(), y.data(), n) -
                       v.dot(x.data(), y.data(), n)) <= tol);
    }
}

TEST_CASE("avx2 elementwise kernels match scalar reference") {
    if (!kernels::avx2_available()) return;
    const auto& s = kernels::scalar_ops();
    const auto& v = kernels::avx2_ops();
    for (std::size_t n : kLengths) {
        const auto x = random_vec(n, 31 + n);
        const auto y = random_vec(n, 47 + n);
        std::vector<double> a(n), b(n);

        s.scaled_add(x.data(), y.data(), 0.73, a.data(), n);
        v.scaled_add(x.data(), y.data(), 0.73, b.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-15));

        // Branch-free transfer functions must agree bit-exactly.
        s.deadzone_symmetric(x.data(), 1.1, a.data(), n);
        v.deadzone_symmetric(x.data(), 1.1, b.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);

        s.deadzone_asymmetric(x.data(), 0.9, a.data(), n);
        v.deadzone_asymmetric(x.data(), 0.9, b.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("deadzone transfer on threshold boundary values") {
    const auto& k = kernels::active();
    const double x[] = {-2.0, -1.1, -0.5, 0.0, 0.5, 1.1, 2.0};
    double out[7];
    k.deadzone_symmetric(x, 1.1, out, 7);
    CHECK(out[0] == doctest::Approx(-0.9));
    CHECK(out[1] == 0.0);  // exactly at -theta stays inside the dead zone
    CHECK(out[2] == 0.0);
    CHECK(out[3] == 0.0);
    CHECK(out[4] == 0.0);
    CHECK(out[5] == 0.0);
    CHECK(out[6] == doctest::Approx(0.9));

    k.deadzone_asymmetric(x, 1.1, out, 7);
    CHECK(out[0] == 0.0);
    CHECK(out[5] == 0.0);  // at theta: output theta - theta = 0
    CHECK(out[6] == doctest::Approx(0.9));
}

TEST_CASE("active table resolves to a valid implementation") {
    const auto& k = kernels::active();
    const double x[] = {1.0, 2.0, 3.0};
    CHECK(k.sum(x, 3) == doctest::Approx(6.0));
    CHECK(k.dot(x, x, 3) == doctest::Approx(14.0));
}
