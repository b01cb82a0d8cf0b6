// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinsim/circuit.hpp"
#include "spinsim/spin.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

/// Device averages for the error-budget calculator and the noise channels.
/// All error fields are fractions in [0, 1].
struct DeviceParams {
    double single_qubit_gate_error = 0.0;
    double cx_gate_error = 0.0;
    double readout_error_per_qubit = 0.0;
    std::uint64_t shots = 1024;

    void validate() const;

    /// Averages of a representative 5-qubit superconducting device:
    /// 0.047% / 1.168% gate errors, 2.63% readout, 1024 shots.
    static DeviceParams reference_device();
};

/// Parses the flat key=value device file (single_qubit_gate_error,
/// cx_gate_error, readout_error, shots). '#' starts a comment.
DeviceParams load_device_params(std::istream& in);
DeviceParams load_device_params(const std::string& path);

/// Per-qubit 2x2 row-stochastic readout confusion matrices;
/// entry (reported | true) in row-major order [p(0|0), p(1|0), p(0|1), p(1|1)].
class ReadoutMatrix {
public:
    static ReadoutMatrix identity(int n_qubits);
    /// Same symmetric flip probability p on every qubit.
    static ReadoutMatrix symmetric(int n_qubits, double p);
    static ReadoutMatrix from_rows(std::vector<std::array<double, 4>> per_qubit);

    int n_qubits() const { return int(mats_.size()); }
    const std::array<double, 4>& qubit_matrix(int q) const { return mats_[q]; }

private:
    explicit ReadoutMatrix(std::vector<std::array<double, 4>> mats) : mats_(std::move(mats)) {}
    std::vector<std::array<double, 4>> mats_;
};

/// Tensor-product confusion applied to an outcome distribution:
/// p'(y) = sum_x p(x) prod_q M_q(y_q | x_q). Output stays normalized.
std::vector<double> apply_readout_noise(const std::vector<double>& probs,
                                        const ReadoutMatrix& r);

/// Probability-level depolarizing surrogate for gate noise: after each gate,
/// with the per-gate rate, the touched qubits' outcomes are replaced by the
/// uniform distribution. Realized by exactly unfolding the channel mixture
/// over Pauli branches of the statevector (no density matrices); branches
/// below `branch_cutoff` of total weight are dropped and the result is
/// renormalized over the kept weight.
struct DepolarizingSpec {
    double single_qubit_rate = 0.0;
    double two_qubit_rate = 0.0;
    double branch_cutoff = 1e-9;
};

std::vector<double> apply_depolarizing(const StateVector& initial, const Circuit& c,
                                       const DepolarizingSpec& spec);

/// Ensemble-averaged symmetric-subspace leakage of the register under the
/// same unfolding; reported as a diagnostic, not bounded.
double depolarized_leakage(const StateVector& initial, const Circuit& c,
                           const SpinRegister& reg, const DepolarizingSpec& spec);

/// Additive worst-case budget, in percent: gate terms, readout terms, and the
/// 1/sqrt(shots) counting-statistics term.
struct ErrorBudget {
    double gates_pct = 0.0;       // n_single * e1 + n_cx * e2
    double readout_pct = 0.0;     // n_measured * e_ro
    double statistics_pct = 0.0;  // 100 / sqrt(shots)
    double total_pct() const { return gates_pct + readout_pct + statistics_pct; }
};

ErrorBudget error_budget(int n_single_gates, int n_cx, int n_measured_qubits,
                         const DeviceParams& d);

}  // namespace spinsim
