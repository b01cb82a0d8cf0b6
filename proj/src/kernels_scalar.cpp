// SPDX-License-Identifier: Apache-2.0
#include "spinsim/kernels.hpp"

namespace spinsim::kernels {

namespace {

// Pair enumeration: for a single-bit mask M, the g-th pair is
// (i0, i0|M) with i0 = ((g & ~(M-1)) << 1) | (g & (M-1)); g runs over
// count/2 indices. This walks every index with the masked bit clear.

void apply_matrix2_ref(c64* amps, std::size_t count, std::uint64_t mask, const c64* m) {
    const std::uint64_t low = mask - 1;
    const std::uint64_t high = ~low;
    const std::size_t pairs = count >> 1;
    for (std::size_t g = 0; g < pairs; ++g) {
        const std::size_t i0 = ((g & high) << 1) | (g & low);
        const std::size_t i1 = i0 | mask;
        const c64 a0 = amps[i0];
        const c64 a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cx_ref(c64* amps, std::size_t count, std::uint64_t control_mask,
                  std::uint64_t target_mask) {
    // Enumerate indices with the control bit set and the target bit clear by
    // expanding a (count/4)-point counter around the two sorted bit positions.
    const std::uint64_t lo_mask = control_mask < target_mask ? control_mask : target_mask;
    const std::uint64_t hi_mask = control_mask < target_mask ? target_mask : control_mask;
    const std::uint64_t low = lo_mask - 1;
    const std::uint64_t mid = ((hi_mask >> 1) - 1) & ~low;
    const std::uint64_t high = ~((hi_mask >> 1) - 1);
    const std::size_t quads = count >> 2;
    for (std::size_t g = 0; g < quads; ++g) {
        const std::size_t base = ((g & high) << 2) | ((g & mid) << 1) | (g & low);
        const std::size_t i0 = base | control_mask;
        const std::size_t i1 = i0 | target_mask;
        const c64 t = amps[i0];
        amps[i0] = amps[i1];
        amps[i1] = t;
    }
}

void probabilities_ref(const c64* amps, std::size_t count, double* out) {
    for (std::size_t i = 0; i < count; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        out[i] = re * re + im * im;
    }
}

double norm_sq_ref(const c64* amps, std::size_t count) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        acc += re * re + im * im;
    }
    return acc;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", apply_matrix2_ref, apply_cx_ref, probabilities_ref,
                                   norm_sq_ref};
    return table;
}

}  // namespace spinsim::kernels
