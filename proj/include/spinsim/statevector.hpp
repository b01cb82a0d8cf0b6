// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spinsim {

using c64 = std::complex<double>;

// Bit convention, fixed globally: qubit 0 is the leftmost label in a ket
// string and the most significant bit of the basis index. For an n-qubit
// index, qubit q occupies bit position n-1-q.
inline constexpr int kMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-10;

inline std::uint64_t bit_mask(int n_qubits, int qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

/// Normalized complex amplitude array over the 2^n computational basis states.
class StateVector {
public:
    static StateVector zero_state(int n_qubits);
    static StateVector basis_state(int n_qubits, std::uint64_t index);
    // Validates the dimension is a power of two <= 2^24 and the norm is 1
    // within kNormTolerance.
    static StateVector from_amplitudes(std::vector<c64> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t size() const { return amps_.size(); }
    std::span<const c64> amplitudes() const { return amps_; }
    std::span<c64> mutable_amplitudes() { return amps_; }
    const c64& amplitude(std::uint64_t index) const { return amps_[index]; }

    double norm_sq() const;

    /// Renders a basis index as a ket-style bitstring, qubit 0 first.
    static std::string bitstring(std::uint64_t index, int n_qubits);

private:
    StateVector(int n_qubits, std::vector<c64> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<c64> amps_;
};

}  // namespace spinsim
