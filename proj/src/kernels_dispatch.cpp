#include "srlab/kernels.hpp"

#include <cstdlib>

namespace srlab::kernels {

bool avx2_available() {
#if defined(__x86_64__) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops& active() {
    static const Ops& ops = []() -> const Ops& {
        const char* force = std::getenv("SRLAB_FORCE_SCALAR");
        if (force && force[0] == '1') return scalar_ops();
        if (avx2_available()) return avx2_ops();
        return scalar_ops();
    }();
    return ops;
}

}  // namespace srlab::kernels
