// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spinsim/sampling.hpp"
#include "spinsim/simulate.hpp"
#include "spinsim/spin.hpp"
#include "spinsim/spin_algebra.hpp"

namespace spinsim {

// Measurement protocols: rotate the requested component onto the z-axis,
// measure every qubit in the computational basis, then aggregate bitstring
// probabilities by Hamming weight inside each spin register.

/// Outcome eigenvalues used when aggregating a register: the spin component
/// value m, or the Pauli value 2m (the usual +-1 convention for s = 1/2).
enum class EigenvalueConvention { spin, pauli };

/// One estimated scalar. Exact-mode estimates carry stderr 0 and shots 0.
struct Estimate {
    enum class Mode { exact, sampled };
    double value = 0.0;
    double stderr_ = 0.0;
    Mode mode = Mode::exact;
    std::uint64_t shots = 0;
};

/// Pre-measurement rotation for one register. z: empty. x: e^{+i pi/2 S^y}
/// as one single-qubit rotation per register qubit. y: e^{-i pi/2 S^x},
/// likewise per qubit. The per-qubit factorization holds because the
/// single-qubit terms commute.
std::vector<Gate> axis_rotation_fragment(const SpinRegister& reg, Axis axis);

/// Weight-class aggregation: probabilities over m = s .. -s (descending),
/// summing every bitstring whose restriction to `reg` has Hamming weight
/// s - m and marginalizing all other qubits. The classes partition the
/// bitstrings, so the output sums to the input total.
std::vector<double> magnetic_number_probabilities(const std::vector<double>& probs, int n_qubits,
                                                  const SpinRegister& reg);
std::vector<double> magnetic_number_probabilities(const ShotCounts& counts,
                                                  const SpinRegister& reg);

/// <S^axis> of the register: applies the rotation fragment to a copy of the
/// state, then returns sum_m m |C_m|^2 from exact probabilities.
Estimate mean_component(const StateVector& state, const SpinRegister& reg, Axis axis);

/// Counts-based overload. The counts must come from measuring after the
/// rotation fragment for the intended axis; stderr is the plug-in multinomial
/// standard error.
Estimate mean_component(const ShotCounts& counts, const SpinRegister& reg);

/// Finite-shot estimate: rotate, sample `shots` outcomes, aggregate.
Estimate mean_component_sampled(const StateVector& state, const SpinRegister& reg, Axis axis,
                                std::uint64_t shots, std::uint64_t seed);

struct MeanVector {
    std::array<Estimate, 3> components;  // x, y, z
    Estimate magnitude;                  // Euclidean norm, stderr propagated
};

/// Euclidean norm of three component estimates with first-order stderr
/// propagation (falls back to the combined spread at a zero vector).
Estimate magnitude_estimate(const std::array<Estimate, 3>& components);

/// Three mean_component calls on copies of the pre-measurement state.
/// In sampled mode each component gets its own derived seed (split by
/// component index), mirroring separate hardware runs.
MeanVector mean_vector(const StateVector& state, const SpinRegister& reg);
MeanVector mean_vector_sampled(const StateVector& state, const SpinRegister& reg,
                               std::uint64_t shots, std::uint64_t seed);

/// Two-register correlation <A_i^axis_i B_j^axis_j>, where each factor is the
/// spin component (eigenvalue m) or the Pauli operator (eigenvalue 2m) per
/// that register's convention. Registers must be disjoint.
Estimate correlation(const StateVector& state, const SpinRegister& reg_i,
                     const SpinRegister& reg_j, Axis axis_i, Axis axis_j,
                     EigenvalueConvention conv_i = EigenvalueConvention::spin,
                     EigenvalueConvention conv_j = EigenvalueConvention::spin);

/// Counts-based overload (counts measured after both rotation fragments).
Estimate correlation(const ShotCounts& counts, const SpinRegister& reg_i,
                     const SpinRegister& reg_j,
                     EigenvalueConvention conv_i = EigenvalueConvention::spin,
                     EigenvalueConvention conv_j = EigenvalueConvention::spin);

Estimate correlation_sampled(const StateVector& state, const SpinRegister& reg_i,
                             const SpinRegister& reg_j, Axis axis_i, Axis axis_j,
                             std::uint64_t shots, std::uint64_t seed,
                             EigenvalueConvention conv_i = EigenvalueConvention::spin,
                             EigenvalueConvention conv_j = EigenvalueConvention::spin);

/// Joint weight-class distribution over (m_i, m_j), both descending; used by
/// the correlation estimators and their tests.
std::vector<std::vector<double>> joint_magnetic_number_probabilities(
    const std::vector<double>& probs, int n_qubits, const SpinRegister& reg_i,
    const SpinRegister& reg_j);

// Exact-mode estimates evaluated on an explicit outcome distribution, for
// pipelines that transform probabilities (readout confusion, depolarizing).
// The distribution must already be measured in the rotated basis.
Estimate mean_from_distribution(const std::vector<double>& probs, int n_qubits,
                                const SpinRegister& reg);
Estimate correlation_from_distribution(const std::vector<double>& probs, int n_qubits,
                                       const SpinRegister& reg_i, const SpinRegister& reg_j,
                                       EigenvalueConvention conv_i = EigenvalueConvention::spin,
                                       EigenvalueConvention conv_j = EigenvalueConvention::spin);

}  // namespace spinsim
