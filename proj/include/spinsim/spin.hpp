// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "spinsim/statevector.hpp"

namespace spinsim {

// Half-integers are stored doubled (2s, 2m) so basis bookkeeping stays in
// exact integer arithmetic.

/// A spin value s >= 1/2, encoded on N = 2s qubits.
class SpinValue {
public:
    static SpinValue from_twice(int twice_s) {
        if (twice_s < 1) throw std::invalid_argument("SpinValue: 2s must be >= 1");
        return SpinValue(twice_s);
    }

    int twice_s() const { return twice_s_; }
    double value() const { return 0.5 * twice_s_; }
    int qubit_count() const { return twice_s_; }      // N = 2s
    int multiplicity() const { return twice_s_ + 1; } // 2s + 1 levels

private:
    explicit SpinValue(int twice_s) : twice_s_(twice_s) {}
    int twice_s_;
};

/// Eigenvalue label m of S^z, -s <= m <= s, same parity as s.
class MagneticQuantumNumber {
public:
    static MagneticQuantumNumber from_twice(const SpinValue& s, int twice_m) {
        if (twice_m > s.twice_s() || twice_m < -s.twice_s())
            throw std::invalid_argument("MagneticQuantumNumber: |2m| must be <= 2s");
        if (((s.twice_s() - twice_m) & 1) != 0)
            throw std::invalid_argument("MagneticQuantumNumber: 2m must have the parity of 2s");
        return MagneticQuantumNumber(twice_m);
    }

    int twice_m() const { return twice_m_; }
    double value() const { return 0.5 * twice_m_; }

private:
    explicit MagneticQuantumNumber(int twice_m) : twice_m_(twice_m) {}
    int twice_m_;
};

/// All valid m for a spin, descending from +s to -s.
std::vector<MagneticQuantumNumber> magnetic_numbers(const SpinValue& s);

/// A spin and the contiguous block of qubits that encodes it inside a larger
/// circuit. Registers of distinct spins must not overlap.
struct SpinRegister {
    SpinRegister(SpinValue spin, int first_qubit)
        : spin(spin), first_qubit(first_qubit) {
        if (first_qubit < 0) throw std::invalid_argument("SpinRegister: negative qubit index");
    }

    SpinValue spin;
    int first_qubit;

    int qubit_count() const { return spin.qubit_count(); }
    int past_end() const { return first_qubit + qubit_count(); }

    bool overlaps(const SpinRegister& other) const {
        return first_qubit < other.past_end() && other.first_qubit < past_end();
    }

    /// Indices of the register's qubits, in order.
    std::vector<int> qubits() const;
};

/// State of one spin given by amplitudes C_m over m = s .. -s (descending),
/// with sum |C_m|^2 = 1 within kNormTolerance.
struct SpinState {
    SpinState(SpinValue spin, std::vector<c64> amplitudes);

    SpinValue spin;
    std::vector<c64> amplitudes;
};

}  // namespace spinsim
