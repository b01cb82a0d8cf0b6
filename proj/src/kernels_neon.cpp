// SPDX-License-Identifier: Apache-2.0
//
// NEON kernel variants (aarch64). One float64x2_t holds a single complex
// amplitude; the sign trick in cmul keeps the arithmetic aligned with the
// scalar reference.
#include "spinsim/kernels.hpp"

#ifdef SPINSIM_BUILD_NEON

#include <arm_neon.h>

namespace spinsim::kernels {

namespace {

inline float64x2_t cmul(double mr, double mi, float64x2_t x) {
    const float64x2_t swapped = vextq_f64(x, x, 1);
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vmulq_n_f64(x, mr), vmulq_n_f64(swapped, mi), sign);
}

void apply_matrix2_neon(c64* amps, std::size_t count, std::uint64_t mask, const c64* m) {
    double* raw = reinterpret_cast<double*>(amps);
    const std::uint64_t low = mask - 1;
    const std::uint64_t high = ~low;
    const std::size_t pairs = count >> 1;
    for (std::size_t g = 0; g < pairs; ++g) {
        const std::size_t i0 = ((g & high) << 1) | (g & low);
        const std::size_t i1 = i0 | mask;
        const float64x2_t a0 = vld1q_f64(raw + 2 * i0);
        const float64x2_t a1 = vld1q_f64(raw + 2 * i1);
        const float64x2_t r0 =
            vaddq_f64(cmul(m[0].real(), m[0].imag(), a0), cmul(m[1].real(), m[1].imag(), a1));
        const float64x2_t r1 =
            vaddq_f64(cmul(m[2].real(), m[2].imag(), a0), cmul(m[3].real(), m[3].imag(), a1));
        vst1q_f64(raw + 2 * i0, r0);
        vst1q_f64(raw + 2 * i1, r1);
    }
}

void apply_cx_neon(c64* amps, std::size_t count, std::uint64_t control_mask,
                   std::uint64_t target_mask) {
    double* raw = reinterpret_cast<double*>(amps);
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
        const float64x2_t x0 = vld1q_f64(raw + 2 * i0);
        const float64x2_t x1 = vld1q_f64(raw + 2 * i1);
        vst1q_f64(raw + 2 * i0, x1);
        vst1q_f64(raw + 2 * i1, x0);
    }
}

void probabilities_neon(const c64* amps, std::size_t count, double* out) {
    const double* raw = reinterpret_cast<const double*>(amps);
    for (std::size_t i = 0; i < count; ++i) {
        const float64x2_t x = vld1q_f64(raw + 2 * i);
        out[i] = vaddvq_f64(vmulq_f64(x, x));
    }
}

double norm_sq_neon(const c64* amps, std::size_t count) {
    const double* raw = reinterpret_cast<const double*>(amps);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < count; ++i) {
        const float64x2_t x = vld1q_f64(raw + 2 * i);
        acc = vaddq_f64(acc, vmulq_f64(x, x));
    }
    return vaddvq_f64(acc);
}

}  // namespace

const KernelTable* neon_kernels() {
    static const KernelTable table{"neon", apply_matrix2_neon, apply_cx_neon, probabilities_neon,
                                   norm_sq_neon};
    return &table;
}

}  // namespace spinsim::kernels

#endif  // SPINSIM_BUILD_NEON
