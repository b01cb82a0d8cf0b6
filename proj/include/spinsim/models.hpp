// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "spinsim/circuit.hpp"
#include "spinsim/spin.hpp"

namespace spinsim {

// The two experiment circuits and closed-form oracles for their observables.
// Time enters only through the dimensionless products omega*t and J*t.

/// Magnetic-field evolution H = omega S.n for one spin register. The U3
/// parameter mapping covers fields perpendicular to z (n_z = 0); general
/// directions are supported via a direct 2x2 exponential when
/// `allow_longitudinal` is set.
struct FieldSpec {
    double omega_t = 0.0;
    std::array<double, 3> direction{1.0, 0.0, 0.0};  // unit vector, 1e-12
    bool allow_longitudinal = false;
};

/// One rotation gate per register qubit realizing e^{-i omega t (sigma.n)/2}
/// on each qubit. For n_z = 0 the gate is
/// U3(omega t, atan2(n_y, n_x) - pi/2, -atan2(n_y, n_x) + pi/2).
Circuit magnetic_field_circuit(const FieldSpec& spec, const SpinRegister& reg, int n_qubits);

/// Ising coupling H = J S_1^z sigma_2^z between a spin-1 (qubits 0,1) and a
/// spin-1/2 (qubit 2).
struct IsingSpec {
    double jt = 0.0;
};

/// Layout constants for the Ising experiment.
SpinRegister ising_spin1_register();
SpinRegister ising_spin_half_register();

/// Full experiment circuit on 3 qubits: preparation rotating every qubit onto
/// +x, then e^{-i Jt S_1^z sigma_2^z} as two ZZ segments
/// (each compiled CX - RZ(Jt) - CX; 4 CX total).
Circuit ising_circuit(const IsingSpec& spec);

/// Evolution block only (no state preparation); 3 qubits.
Circuit ising_evolution(const IsingSpec& spec);

/// Gate preparation of |1,m> for a single spin-1 register starting from |00>;
/// used by the QASM exporter so emitted circuits are runnable from |0...0>.
std::vector<Gate> spin1_dicke_prep(const SpinRegister& reg, int twice_m);

// Closed-form references.

/// (|C_+1|^2, |C_0|^2, |C_-1|^2) during field evolution from |1,m>;
/// initial_m in {+1, 0, -1}.
std::array<double, 3> analytic_field_probabilities(int initial_m, double omega_t);

/// (<S^x>, <S^y>, <S^z>) during field evolution from |1,m>.
std::array<double, 3> analytic_field_means(int initial_m, double omega_t);

struct IsingAnalytic {
    double mean_magnitude;   // |<S_1>| = |cos(Jt)|
    double xx_correlation;   // <S_1^x sigma_2^x> = cos(Jt)
};
IsingAnalytic analytic_ising(double jt);

}  // namespace spinsim
