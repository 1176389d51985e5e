#include <cstdlib>
#include <cstring>

#include "qmono/kernels.hpp"

namespace qmono::kern {

const Ops* avx2_ops_impl();  // nullptr unless compiled with AVX2 support

const Ops* avx2_ops() {
    static const Ops* ops = []() -> const Ops* {
        const Ops* impl = avx2_ops_impl();
        if (impl == nullptr) return nullptr;
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
        if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
#endif
        return impl;
    }();
    return ops;
}

const Ops& active() {
    static const Ops& ops = []() -> const Ops& {
        const char* force = std::getenv("QMONO_KERNELS");
        if (force != nullptr && std::strcmp(force, "scalar") == 0) return scalar_ops();
        const Ops* simd = avx2_ops();
        return simd != nullptr ? *simd : scalar_ops();
    }();
    return ops;
}

}  // namespace qmono::kern
