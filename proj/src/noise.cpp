// SPDX-License-Identifier: Apache-2.0
#include "spinsim/noise.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "spinsim/simulate.hpp"
#include "spinsim/spin_algebra.hpp"

namespace spinsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

void DeviceParams::validate() const {
    auto fraction = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!fraction(single_qubit_gate_error) || !fraction(cx_gate_error) ||
        !fraction(readout_error_per_qubit))
        throw std::invalid_argument("DeviceParams: error rates must be fractions in [0, 1]");
    if (shots < 1) throw std::invalid_argument("DeviceParams: shots must be >= 1");
}

DeviceParams DeviceParams::reference_device() {
    return DeviceParams{0.00047, 0.01168, 0.0263, 1024};
}

DeviceParams load_device_params(std::istream& in) {
    DeviceParams p = DeviceParams::reference_device();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // Trim and skip blanks.
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("device params line " + std::to_string(line_no) +
                                        ": expected key=value");
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        try {
            if (key == "single_qubit_gate_error")
                p.single_qubit_gate_error = std::stod(value);
            else if (key == "cx_gate_error")
                p.cx_gate_error = std::stod(value);
            else if (key == "readout_error")
                p.readout_error_per_qubit = std::stod(value);
            else if (key == "shots")
                p.shots = std::stoull(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("device params line " + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    p.validate();
    return p;
}

DeviceParams load_device_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open device params file: " + path);
    return load_device_params(in);
}

ReadoutMatrix ReadoutMatrix::identity(int n_qubits) {
    return ReadoutMatrix(std::vector<std::array<double, 4>>(
        n_qubits, std::array<double, 4>{1.0, 0.0, 0.0, 1.0}));
}

ReadoutMatrix ReadoutMatrix::symmetric(int n_qubits, double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("ReadoutMatrix: flip probability must be in [0, 1]");
    return ReadoutMatrix(std::vector<std::array<double, 4>>(
        n_qubits, std::array<double, 4>{1.0 - p, p, p, 1.0 - p}));
}

ReadoutMatrix ReadoutMatrix::from_rows(std::vector<std::array<double, 4>> per_qubit) {
    for (const auto& m : per_qubit) {
        for (double v : m)
            if (v < 0.0 || v > 1.0)
                throw std::invalid_argument("ReadoutMatrix: entries must be in [0, 1]");
        if (std::abs(m[0] + m[1] - 1.0) > 1e-12 || std::abs(m[2] + m[3] - 1.0) > 1e-12)
            throw std::invalid_argument("ReadoutMatrix: rows must sum to 1");
    }
    return ReadoutMatrix(std::move(per_qubit));
}

std::vector<double> apply_readout_noise(const std::vector<double>& probs,
                                        const ReadoutMatrix& r) {
    const int n = r.n_qubits();
    if (probs.size() != (std::size_t{1} << n))
        throw std::invalid_argument("apply_readout_noise: size mismatch with matrix qubits");
    std::vector<double> out = probs;
    // Contract each qubit's 2x2 stochastic matrix along its index axis,
    // reusing the strided-pair walk of the gate kernels.
    // Layout: [p(0|0), p(1|0), p(0|1), p(1|1)].
    for (int q = 0; q < n; ++q) {
        const auto& m = r.qubit_matrix(q);
        const std::uint64_t mask = bit_mask(n, q);
        const std::uint64_t low = mask - 1;
        const std::uint64_t high = ~low;
        for (std::uint64_t g = 0; g < out.size() / 2; ++g) {
            const std::uint64_t i0 = ((g & high) << 1) | (g & low);
            const std::uint64_t i1 = i0 | mask;
            const double p0 = out[i0];
            const double p1 = out[i1];
            out[i0] = m[0] * p0 + m[2] * p1;
            out[i1] = m[1] * p0 + m[3] * p1;
        }
    }
    return out;
}

namespace {

Gate pauli_gate(int qubit, int pauli) {
    switch (pauli) {
        case 1:
            return Gate::x(qubit);
        case 2:
            return Gate::u3(qubit, kPi, 0.5 * kPi, 0.5 * kPi);  // exact sigma^y
        case 3:
            return Gate::rz(qubit, kPi);  // sigma^z up to global phase
        default:
            throw std::logic_error("pauli_gate: index must be 1..3");
    }
}

// Depth-first exact unfolding of the per-gate depolarizing mixture: after
// each gate the branch splits into the no-error continuation (merged with
// the identity Pauli) and the 4^k - 1 nontrivial Pauli insertions on the
// touched qubits. Branch weights below the cutoff are dropped; the caller
// renormalizes over the weight that reached a sink.
struct Unfolder {
    const Circuit& circuit;
    const DepolarizingSpec& spec;
    std::function<void(const StateVector&, double)> sink;
    double kept_weight = 0.0;

    void run(const StateVector& initial) {
        if (spec.single_qubit_rate < 0.0 || spec.single_qubit_rate > 1.0 ||
            spec.two_qubit_rate < 0.0 || spec.two_qubit_rate > 1.0)
            throw std::invalid_argument("apply_depolarizing: rates must be in [0, 1]");
        descend(initial, 0, 1.0);
    }

    void descend(StateVector psi, std::size_t gate_index, double weight) {
        if (gate_index == circuit.gates().size()) {
            sink(psi, weight);
            kept_weight += weight;
            return;
        }
        const Gate& g = circuit.gates()[gate_index];
        psi = apply_gate(psi, g);
        const double rate = g.is_two_qubit() ? spec.two_qubit_rate : spec.single_qubit_rate;
        if (rate <= 0.0) {
            descend(std::move(psi), gate_index + 1, weight);
            return;
        }
        const int n_pauli = g.is_two_qubit() ? 16 : 4;
        const double branch_weight = weight * rate / n_pauli;
        for (int p = 1; p < n_pauli; ++p) {
            if (branch_weight <= spec.branch_cutoff) break;
            StateVector branch = psi;
            if (g.is_two_qubit()) {
                if (p & 3) branch = apply_gate(branch, pauli_gate(g.qubit, p & 3));
                if (p >> 2) branch = apply_gate(branch, pauli_gate(g.target, p >> 2));
            } else {
                branch = apply_gate(branch, pauli_gate(g.qubit, p));
            }
            descend(std::move(branch), gate_index + 1, branch_weight);
        }
        descend(std::move(psi), gate_index + 1, weight * (1.0 - rate) + branch_weight);
    }
};

}  // namespace

std::vector<double> apply_depolarizing(const StateVector& initial, const Circuit& c,
                                       const DepolarizingSpec& spec) {
    if (initial.n_qubits() != c.n_qubits())
        throw std::invalid_argument("apply_depolarizing: circuit and state sizes differ");
    std::vector<double> acc(initial.size(), 0.0);
    Unfolder u{c, spec,
               [&](const StateVector& psi, double w) {
                   const auto p = exact_probabilities(psi);
                   for (std::size_t i = 0; i < p.size(); ++i) acc[i] += w * p[i];
               }};
    u.run(initial);
    if (u.kept_weight <= 0.0)
        throw std::invalid_argument("apply_depolarizing: branch cutoff pruned all weight");
    for (double& v : acc) v /= u.kept_weight;
    return acc;
}

double depolarized_leakage(const StateVector& initial, const Circuit& c,
                           const SpinRegister& reg, const DepolarizingSpec& spec) {
    double acc = 0.0;
    Unfolder u{c, spec,
               [&](const StateVector& psi, double w) { acc += w * singlet_leakage(psi, reg); }};
    u.run(initial);
    if (u.kept_weight <= 0.0)
        throw std::invalid_argument("depolarized_leakage: branch cutoff pruned all weight");
    return acc / u.kept_weight;
}

ErrorBudget error_budget(int n_single_gates, int n_cx, int n_measured_qubits,
                         const DeviceParams& d) {
    if (n_single_gates < 0 || n_cx < 0 || n_measured_qubits < 0)
        throw std::invalid_argument("error_budget: counts must be non-negative");
    d.validate();
    ErrorBudget b;
    b.gates_pct =
        100.0 * (n_single_gates * d.single_qubit_gate_error + n_cx * d.cx_gate_error);
    b.readout_pct = 100.0 * n_measured_qubits * d.readout_error_per_qubit;
    b.statistics_pct = 100.0 / std::sqrt(double(d.shots));
    return b;
}

}  // namespace spinsim
