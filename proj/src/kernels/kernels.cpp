// Copyright (C) 2026 the depthwarp authors
// SPDX-License-Identifier: Apache-2.0
#include "dw/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace dw::kernels {

bool avx2_available() {
#if defined(DW_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

#if !defined(DW_HAVE_AVX2)
// Stub so non-x86 builds link; never reached because avx2_available() is false.
const KernelTable& avx2_kernels() { return scalar_kernels(); }
#endif

const KernelTable& active_kernels() {
    static const KernelTable* selected = [] {
        const char* env = std::getenv("DW_KERNELS");
        if (env != nullptr) {
            if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
            if (std::strcmp(env, "avx2") == 0 && avx2_available()) return &avx2_kernels();
        }
        return avx2_available() ? &avx2_kernels() : &scalar_kernels();
    }();
    return *selected;
}

}  // namespace dw::kernels
