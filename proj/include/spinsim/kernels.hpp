// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spinsim::kernels {

using c64 = std::complex<double>;

// Amplitude-array primitives behind the simulator. Every operation has a
// scalar reference implementation and optional SIMD variants; the variants
// must agree with the reference within normal floating-point reassociation
// error and are equivalence-tested against it.
//
// `mask` arguments are single-bit index masks (bit position of the qubit
// inside the basis index).
struct KernelTable {
    const char* name;
    // In-place 2x2 unitary on the qubit selected by `mask`; `m` is row-major.
    void (*apply_matrix2)(c64* amps, std::size_t count, std::uint64_t mask, const c64* m);
    // In-place CX: swaps target pairs on indices where the control bit is set.
    void (*apply_cx)(c64* amps, std::size_t count, std::uint64_t control_mask,
                     std::uint64_t target_mask);
    // out[i] = |amps[i]|^2
    void (*probabilities)(const c64* amps, std::size_t count, double* out);
    double (*norm_sq)(const c64* amps, std::size_t count);
};

/// Scalar reference kernels. Always available.
const KernelTable& scalar_kernels();

/// Runtime-selected kernels: the widest SIMD variant this CPU supports,
/// unless the SPINSIM_KERNELS environment variable (scalar|avx2|neon) forces
/// a choice. Selection happens once, on first call.
const KernelTable& active_kernels();

/// All kernel tables usable on this CPU (scalar first).
std::vector<const KernelTable*> available_kernels();

}  // namespace spinsim::kernels
