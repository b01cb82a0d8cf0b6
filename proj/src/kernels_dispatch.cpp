// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <string>

#include "spinsim/kernels.hpp"

namespace spinsim::kernels {

#ifdef SPINSIM_BUILD_AVX2
const KernelTable* avx2_kernels();  // defined in kernels_avx2.cpp
#endif
#ifdef SPINSIM_BUILD_NEON
const KernelTable* neon_kernels();  // defined in kernels_neon.cpp
#endif

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> tables{&scalar_kernels()};
#ifdef SPINSIM_BUILD_AVX2
    if (__builtin_cpu_supports("avx2")) tables.push_back(avx2_kernels());
#endif
#ifdef SPINSIM_BUILD_NEON
    tables.push_back(neon_kernels());  // baseline on aarch64
#endif
    return tables;
}

namespace {

const KernelTable* select() {
    const auto tables = available_kernels();
    if (const char* forced = std::getenv("SPINSIM_KERNELS")) {
        const std::string want(forced);
        for (const KernelTable* t : tables)
            if (want == t->name) return t;
        // Unknown or unsupported name: fall through to the default choice.
    }
    return tables.back();
}

}  // namespace

const KernelTable& active_kernels() {
    static const KernelTable* chosen = select();
    return *chosen;
}

}  // namespace spinsim::kernels
