#include "srlab/kernels.hpp"

#ifdef __x86_64__
#include <immintrin.h>

namespace srlab::kernels {
namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                               acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                               _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                               acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void scaled_add_avx2(const double* x, const double* y, double a, double* out,
                     std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(y + i),
                                    _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = x[i] + a * y[i];
}

void deadzone_symmetric_avx2(const double* x, double theta, double* out,
                             std::size_t n) {
    const __m256d th = _mm256_set1_pd(theta);
    const __m256d nth = _mm256_set1_pd(-theta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        __m256d above = _mm256_cmp_pd(v, th, _CMP_GT_OQ);
        __m256d below = _mm256_cmp_pd(v, nth, _CMP_LT_OQ);
        __m256d shifted_up = _mm256_sub_pd(v, th);
        __m256d shifted_down = _mm256_add_pd(v, th);
        __m256d r = _mm256_setzero_pd();
        r = _mm256_blendv_pd(r, shifted_up, above);
        r = _mm256_blendv_pd(r, shifted_down, below);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) {
        const double v = x[i];
        out[i] = v > theta ? v - theta : (v < -theta ? v + theta : 0.0);
    }
}

void deadzone_asymmetric_avx2(const double* x, double theta, double* out,
                              std::size_t n) {
    const __m256d th = _mm256_set1_pd(theta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        __m256d ge = _mm256_cmp_pd(v, th, _CMP_GE_OQ);
        __m256d r = _mm256_and_pd(_mm256_sub_pd(v, th), ge);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = x[i] >= theta ? x[i] - theta : 0.0;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{
        "avx2",        sum_avx2,
        dot_avx2,      scaled_add_avx2,
        deadzone_symmetric_avx2, deadzone_asymmetric_avx2,
    };
    return ops;
}

}  // namespace srlab::kernels

#else

namespace srlab::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace srlab::kernels

#endif
