// SPDX-License-Identifier: Apache-2.0
#include "spinsim/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinsim/simulate.hpp"

namespace spinsim {

std::vector<double> ShotCounts::to_probabilities() const {
    std::vector<double> probs(std::size_t{1} << n_qubits, 0.0);
    for (const auto& [bits, c] : counts) {
        std::uint64_t index = 0;
        for (int q = 0; q < n_qubits; ++q)
            if (bits[q] == '1') index |= bit_mask(n_qubits, q);
        probs[index] = double(c) / double(shots);
    }
    return probs;
}

ShotCounts sample_counts(const std::vector<double>& probs, int n_qubits, std::uint64_t shots,
                         std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample_counts: shots must be >= 1");
    if (probs.size() != (std::size_t{1} << n_qubits))
        throw std::invalid_argument("sample_counts: probability vector size mismatch");

    // Inverse-CDF draws against the cumulative distribution. Zero-probability
    // outcomes have zero-width intervals and cannot be selected.
    std::vector<double> cum(probs.size());
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) last_nonzero = i;
        acc += probs[i];
        cum[i] = acc;
    }

    SplitMix64 rng(seed);
    std::vector<std::uint64_t> hits(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * acc;
        auto it = std::upper_bound(cum.begin(), cum.end(), u);
        std::size_t idx = it == cum.end() ? last_nonzero : std::size_t(it - cum.begin());
        ++hits[idx];
    }

    ShotCounts out;
    out.n_qubits = n_qubits;
    out.shots = shots;
    for (std::size_t i = 0; i < hits.size(); ++i)
        if (hits[i] > 0) out.counts[StateVector::bitstring(i, n_qubits)] = hits[i];
    return out;
}

ShotCounts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    return sample_counts(exact_probabilities(state), state.n_qubits(), shots, seed);
}

}  // namespace spinsim
