// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernel variants. Interleaved complex<double> layout: one __m256d
// holds two amplitudes. Complex products use mul + addsub (no FMA
// contraction), so the arithmetic matches the scalar reference up to
// reassociation of the final reductions.
#include "spinsim/kernels.hpp"

#ifdef SPINSIM_BUILD_AVX2

#include <immintrin.h>

namespace spinsim::kernels {

namespace {

// (vr + i*vi) * x for two packed complexes; vr/vi carry the scalar's real and
// imaginary parts replicated per lane.
inline __m256d cmul(__m256d vr, __m256d vi, __m256d x) {
    const __m256d x_swapped = _mm256_permute_pd(x, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(vr, x), _mm256_mul_pd(vi, x_swapped));
}

void apply_matrix2_avx2(c64* amps, std::size_t count, std::uint64_t mask, const c64* m) {
    double* raw = reinterpret_cast<double*>(amps);
    if (mask == 1) {
        // Adjacent pairs: both amplitudes of a pair sit in one register.
        // Column multipliers pack (m00, m10) and (m01, m11) so a single cmul
        // produces (m00*a0, m10*a0) and (m01*a1, m11*a1).
        const __m256d c0r = _mm256_setr_pd(m[0].real(), m[0].real(), m[2].real(), m[2].real());
        const __m256d c0i = _mm256_setr_pd(m[0].imag(), m[0].imag(), m[2].imag(), m[2].imag());
        const __m256d c1r = _mm256_setr_pd(m[1].real(), m[1].real(), m[3].real(), m[3].real());
        const __m256d c1i = _mm256_setr_pd(m[1].imag(), m[1].imag(), m[3].imag(), m[3].imag());
        for (std::size_t i = 0; i < count; i += 2) {
            const __m256d x = _mm256_loadu_pd(raw + 2 * i);
            const __m256d a0 = _mm256_permute2f128_pd(x, x, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(x, x, 0x11);
            const __m256d r = _mm256_add_pd(cmul(c0r, c0i, a0), cmul(c1r, c1i, a1));
            _mm256_storeu_pd(raw + 2 * i, r);
        }
        return;
    }
    // mask >= 2: each half of a pair group is a contiguous run of `mask`
    // amplitudes; walk the runs two complexes at a time.
    const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t block = 0; block < count; block += 2 * mask) {
        for (std::size_t j = 0; j < mask; j += 2) {
            double* p0 = raw + 2 * (block + j);
            double* p1 = raw + 2 * (block + j + mask);
            const __m256d x0 = _mm256_loadu_pd(p0);
            const __m256d x1 = _mm256_loadu_pd(p1);
            const __m256d r0 = _mm256_add_pd(cmul(m00r, m00i, x0), cmul(m01r, m01i, x1));
            const __m256d r1 = _mm256_add_pd(cmul(m10r, m10i, x0), cmul(m11r, m11i, x1));
            _mm256_storeu_pd(p0, r0);
            _mm256_storeu_pd(p1, r1);
        }
    }
}

void apply_cx_avx2(c64* amps, std::size_t count, std::uint64_t control_mask,
                   std::uint64_t target_mask) {
    double* raw = reinterpret_cast<double*>(amps);
    const std::uint64_t lo_mask = control_mask < target_mask ? control_mask : target_mask;
    const std::uint64_t hi_mask = control_mask < target_mask ? target_mask : control_mask;
    const std::uint64_t low = lo_mask - 1;
    const std::uint64_t mid = ((hi_mask >> 1) - 1) & ~low;
    const std::uint64_t high = ~((hi_mask >> 1) - 1);
    const std::size_t quads = count >> 2;
    if (lo_mask >= 2) {
        // Swap-set indices form contiguous runs of lo_mask; vector-swap them.
        for (std::size_t g = 0; g < quads; g += lo_mask) {
            const std::size_t base = ((g & high) << 2) | ((g & mid) << 1) | (g & low);
            for (std::size_t j = 0; j < lo_mask; j += 2) {
                double* p0 = raw + 2 * ((base | control_mask) + j);
                double* p1 = raw + 2 * ((base | control_mask | target_mask) + j);
                const __m256d x0 = _mm256_loadu_pd(p0);
                const __m256d x1 = _mm256_loadu_pd(p1);
                _mm256_storeu_pd(p0, x1);
                _mm256_storeu_pd(p1, x0);
            }
        }
        return;
    }
    for (std::size_t g = 0; g < quads; ++g) {
        const std::size_t base = ((g & high) << 2) | ((g & mid) << 1) | (g & low);
        const std::size_t i0 = base | control_mask;
        const std::size_t i1 = i0 | target_mask;
        const __m128d x0 = _mm_loadu_pd(raw + 2 * i0);
        const __m128d x1 = _mm_loadu_pd(raw + 2 * i1);
        _mm_storeu_pd(raw + 2 * i0, x1);
        _mm_storeu_pd(raw + 2 * i1, x0);
    }
}

void probabilities_avx2(const c64* amps, std::size_t count, double* out) {
    const double* raw = reinterpret_cast<const double*>(amps);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d x = _mm256_loadu_pd(raw + 2 * i);
        const __m256d y = _mm256_loadu_pd(raw + 2 * i + 4);
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
        // hadd interleaves across 128-bit lanes; restore index order.
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
    }
    for (; i < count; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        out[i] = re * re + im * im;
    }
}

double norm_sq_avx2(const c64* amps, std::size_t count) {
    const double* raw = reinterpret_cast<const double*>(amps);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256d x = _mm256_loadu_pd(raw + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    double total = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
    for (; i < count; ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        total += re * re + im * im;
    }
    return total;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", apply_matrix2_avx2, apply_cx_avx2, probabilities_avx2,
                                   norm_sq_avx2};
    return &table;
}

}  // namespace spinsim::kernels

#endif  // SPINSIM_BUILD_AVX2
