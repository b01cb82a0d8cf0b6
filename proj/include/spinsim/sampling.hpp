// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinsim/statevector.hpp"

namespace spinsim {

// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter-based generator.
// state advances by the golden-gamma constant; output is a finalizing mix.
// Chosen because it is trivially portable: identical (seed, call sequence)
// gives identical draws on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Derives an independent stream seed; used to give each sweep point and
    /// each estimator its own generator regardless of scheduling order.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
        return g.next_u64();
    }

private:
    std::uint64_t state_;
};

/// Multiset of measured bitstrings (qubit 0 leftmost) with the total shot
/// number. The map is ordered, so iteration order is deterministic.
struct ShotCounts {
    int n_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;

    /// Empirical outcome frequencies as a dense 2^n vector.
    std::vector<double> to_probabilities() const;
};

/// Multinomial draw of `shots` outcomes from |state|^2 using SplitMix64.
/// Identical (state, shots, seed) gives identical counts. shots must be >= 1.
ShotCounts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Same draw from an explicit probability vector (used by the noisy pipeline).
ShotCounts sample_counts(const std::vector<double>& probs, int n_qubits, std::uint64_t shots,
                         std::uint64_t seed);

}  // namespace spinsim
