// SPDX-License-Identifier: Apache-2.0
#include "spinsim/protocols.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinsim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_register(int n_qubits, const SpinRegister& reg, const char* who) {
    if (reg.first_qubit < 0 || reg.past_end() > n_qubits)
        throw std::out_of_range(std::string(who) + ": register outside the state");
}

std::uint64_t register_index_mask(int n_qubits, const SpinRegister& reg) {
    const int lo_bits = n_qubits - reg.past_end();
    return ((std::uint64_t{1} << reg.qubit_count()) - 1) << lo_bits;
}

int register_string_weight(const std::string& bits, const SpinRegister& reg) {
    int w = 0;
    for (int q = reg.first_qubit; q < reg.past_end(); ++q)
        if (bits[q] == '1') ++w;
    return w;
}

/// m for weight class k (k ones among 2s qubits): m = s - k.
double class_value(const SpinRegister& reg, int k, EigenvalueConvention conv) {
    const double m = 0.5 * (reg.spin.twice_s() - 2 * k);
    return conv == EigenvalueConvention::spin ? m : 2.0 * m;
}

Estimate estimate_from_classes(const std::vector<double>& class_probs,
                               const std::vector<double>& values, std::uint64_t shots) {
    double mean = 0.0, second = 0.0;
    for (std::size_t k = 0; k < class_probs.size(); ++k) {
        mean += values[k] * class_probs[k];
        second += values[k] * values[k] * class_probs[k];
    }
    Estimate e;
    e.value = mean;
    if (shots > 0) {
        // Multinomial variance of a plug-in linear statistic.
        const double var = (second - mean * mean) / double(shots);
        e.stderr_ = var > 0.0 ? std::sqrt(var) : 0.0;
        e.mode = Estimate::Mode::sampled;
        e.shots = shots;
    }
    return e;
}

StateVector rotated_copy(const StateVector& state, const SpinRegister& reg, Axis axis) {
    StateVector out = state;
    for (const Gate& g : axis_rotation_fragment(reg, axis)) out = apply_gate(out, g);
    return out;
}

}  // namespace

std::vector<Gate> axis_rotation_fragment(const SpinRegister& reg, Axis axis) {
    std::vector<Gate> gates;
    if (axis == Axis::z) return gates;  // measurement basis already
    gates.reserve(reg.qubit_count());
    for (int q : reg.qubits()) {
        if (axis == Axis::x) {
            // e^{+i pi/4 sigma^y} per qubit, realizing e^{+i pi/2 S^y}:
            // maps the x-component onto the measured z-axis.
            gates.push_back(Gate::u3(q, 0.5 * kPi, kPi, kPi));
        } else {
            // e^{-i pi/4 sigma^x} per qubit, realizing e^{-i pi/2 S^x}.
            gates.push_back(Gate::u3(q, 0.5 * kPi, -0.5 * kPi, 0.5 * kPi));
        }
    }
    return gates;
}

std::vector<double> magnetic_number_probabilities(const std::vector<double>& probs, int n_qubits,
                                                  const SpinRegister& reg) {
    check_register(n_qubits, reg, "magnetic_number_probabilities");
    if (probs.size() != (std::uint64_t{1} << n_qubits))
        throw std::invalid_argument("magnetic_number_probabilities: distribution size mismatch");
    const std::uint64_t mask = register_index_mask(n_qubits, reg);
    std::vector<double> out(reg.qubit_count() + 1, 0.0);
    for (std::uint64_t i = 0; i < probs.size(); ++i)
        out[std::popcount(i & mask)] += probs[i];
    return out;
}

std::vector<double> magnetic_number_probabilities(const ShotCounts& counts,
                                                  const SpinRegister& reg) {
    check_register(counts.n_qubits, reg, "magnetic_number_probabilities");
    std::vector<double> out(reg.qubit_count() + 1, 0.0);
    for (const auto& [bits, c] : counts.counts)
        out[register_string_weight(bits, reg)] += double(c) / double(counts.shots);
    return out;
}

std::vector<std::vector<double>> joint_magnetic_number_probabilities(
    const std::vector<double>& probs, int n_qubits, const SpinRegister& reg_i,
    const SpinRegister& reg_j) {
    check_register(n_qubits, reg_i, "joint_magnetic_number_probabilities");
    check_register(n_qubits, reg_j, "joint_magnetic_number_probabilities");
    if (reg_i.overlaps(reg_j))
        throw std::invalid_argument("joint_magnetic_number_probabilities: registers overlap");
    const std::uint64_t mask_i = register_index_mask(n_qubits, reg_i);
    const std::uint64_t mask_j = register_index_mask(n_qubits, reg_j);
    std::vector<std::vector<double>> out(reg_i.qubit_count() + 1,
                                         std::vector<double>(reg_j.qubit_count() + 1, 0.0));
    for (std::uint64_t b = 0; b < probs.size(); ++b)
        out[std::popcount(b & mask_i)][std::popcount(b & mask_j)] += probs[b];
    return out;
}

Estimate mean_from_distribution(const std::vector<double>& probs, int n_qubits,
                                const SpinRegister& reg) {
    const auto pm = magnetic_number_probabilities(probs, n_qubits, reg);
    std::vector<double> values(pm.size());
    for (std::size_t k = 0; k < pm.size(); ++k)
        values[k] = class_value(reg, int(k), EigenvalueConvention::spin);
    return estimate_from_classes(pm, values, 0);
}

Estimate mean_component(const StateVector& state, const SpinRegister& reg, Axis axis) {
    const StateVector rotated = rotated_copy(state, reg, axis);
    return mean_from_distribution(exact_probabilities(rotated), state.n_qubits(), reg);
}

Estimate mean_component(const ShotCounts& counts, const SpinRegister& reg) {
    const auto pm = magnetic_number_probabilities(counts, reg);
    std::vector<double> values(pm.size());
    for (std::size_t k = 0; k < pm.size(); ++k)
        values[k] = class_value(reg, int(k), EigenvalueConvention::spin);
    return estimate_from_classes(pm, values, counts.shots);
}

Estimate mean_component_sampled(const StateVector& state, const SpinRegister& reg, Axis axis,
                                std::uint64_t shots, std::uint64_t seed) {
    const StateVector rotated = rotated_copy(state, reg, axis);
    return mean_component(sample_counts(rotated, shots, seed), reg);
}

Estimate magnitude_estimate(const std::array<Estimate, 3>& comps) {
    Estimate mag;
    double sq = 0.0;
    for (const Estimate& c : comps) sq += c.value * c.value;
    mag.value = std::sqrt(sq);
    mag.mode = comps[0].mode;
    mag.shots = comps[0].shots;
    if (mag.mode == Estimate::Mode::sampled) {
        // First-order propagation through the Euclidean norm; at a zero
        // vector the gradient degenerates, fall back to the combined spread.
        double var = 0.0;
        if (mag.value > 1e-15) {
            for (const Estimate& c : comps) {
                const double g = c.value / mag.value;
                var += g * g * c.stderr_ * c.stderr_;
            }
        } else {
            for (const Estimate& c : comps) var += c.stderr_ * c.stderr_;
        }
        mag.stderr_ = std::sqrt(var);
    }
    return mag;
}

MeanVector mean_vector(const StateVector& state, const SpinRegister& reg) {
    MeanVector mv{{mean_component(state, reg, Axis::x), mean_component(state, reg, Axis::y),
                   mean_component(state, reg, Axis::z)},
                  {}};
    mv.magnitude = magnitude_estimate(mv.components);
    return mv;
}

MeanVector mean_vector_sampled(const StateVector& state, const SpinRegister& reg,
                               std::uint64_t shots, std::uint64_t seed) {
    // One independent measurement run per component, seeds split by index.
    MeanVector mv{{mean_component_sampled(state, reg, Axis::x, shots, SplitMix64::split(seed, 0)),
                   mean_component_sampled(state, reg, Axis::y, shots, SplitMix64::split(seed, 1)),
                   mean_component_sampled(state, reg, Axis::z, shots, SplitMix64::split(seed, 2))},
                  {}};
    mv.magnitude = magnitude_estimate(mv.components);
    return mv;
}

namespace {

Estimate correlation_from_joint(const std::vector<std::vector<double>>& joint,
                                const SpinRegister& reg_i, const SpinRegister& reg_j,
                                EigenvalueConvention conv_i, EigenvalueConvention conv_j,
                                std::uint64_t shots) {
    double mean = 0.0, second = 0.0;
    for (std::size_t ki = 0; ki < joint.size(); ++ki) {
        const double vi = class_value(reg_i, int(ki), conv_i);
        for (std::size_t kj = 0; kj < joint[ki].size(); ++kj) {
            const double w = vi * class_value(reg_j, int(kj), conv_j);
            mean += w * joint[ki][kj];
            second += w * w * joint[ki][kj];
        }
    }
    Estimate e;
    e.value = mean;
    if (shots > 0) {
        const double var = (second - mean * mean) / double(shots);
        e.stderr_ = var > 0.0 ? std::sqrt(var) : 0.0;
        e.mode = Estimate::Mode::sampled;
        e.shots = shots;
    }
    return e;
}

}  // namespace

Estimate correlation_from_distribution(const std::vector<double>& probs, int n_qubits,
                                       const SpinRegister& reg_i, const SpinRegister& reg_j,
                                       EigenvalueConvention conv_i, EigenvalueConvention conv_j) {
    const auto joint = joint_magnetic_number_probabilities(probs, n_qubits, reg_i, reg_j);
    return correlation_from_joint(joint, reg_i, reg_j, conv_i, conv_j, 0);
}

Estimate correlation(const StateVector& state, const SpinRegister& reg_i,
                     const SpinRegister& reg_j, Axis axis_i, Axis axis_j,
                     EigenvalueConvention conv_i, EigenvalueConvention conv_j) {
    if (reg_i.overlaps(reg_j)) throw std::invalid_argument("correlation: registers overlap");
    StateVector rotated = rotated_copy(state, reg_i, axis_i);
    rotated = rotated_copy(rotated, reg_j, axis_j);
    return correlation_from_distribution(exact_probabilities(rotated), state.n_qubits(), reg_i,
                                         reg_j, conv_i, conv_j);
}

Estimate correlation(const ShotCounts& counts, const SpinRegister& reg_i,
                     const SpinRegister& reg_j, EigenvalueConvention conv_i,
                     EigenvalueConvention conv_j) {
    check_register(counts.n_qubits, reg_i, "correlation");
    check_register(counts.n_qubits, reg_j, "correlation");
    if (reg_i.overlaps(reg_j)) throw std::invalid_argument("correlation: registers overlap");
    std::vector<std::vector<double>> joint(reg_i.qubit_count() + 1,
                                           std::vector<double>(reg_j.qubit_count() + 1, 0.0));
    for (const auto& [bits, c] : counts.counts)
        joint[register_string_weight(bits, reg_i)][register_string_weight(bits, reg_j)] +=
            double(c) / double(counts.shots);
    return correlation_from_joint(joint, reg_i, reg_j, conv_i, conv_j, counts.shots);
}

Estimate correlation_sampled(const StateVector& state, const SpinRegister& reg_i,
                             const SpinRegister& reg_j, Axis axis_i, Axis axis_j,
                             std::uint64_t shots, std::uint64_t seed,
                             EigenvalueConvention conv_i, EigenvalueConvention conv_j) {
    if (reg_i.overlaps(reg_j)) throw std::invalid_argument("correlation: registers overlap");
    StateVector rotated = rotated_copy(state, reg_i, axis_i);
    rotated = rotated_copy(rotated, reg_j, axis_j);
    return correlation(sample_counts(rotated, shots, seed), reg_i, reg_j, conv_i, conv_j);
}

}  // namespace spinsim
