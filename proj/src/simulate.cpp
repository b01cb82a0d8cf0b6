// SPDX-License-Identifier: Apache-2.0
#include "spinsim/simulate.hpp"

#include <stdexcept>

#include "spinsim/kernels.hpp"

namespace spinsim {

namespace {

void apply_in_place(StateVector& state, const Gate& g) {
    const int n = state.n_qubits();
    if (g.qubit < 0 || g.qubit >= n) throw std::out_of_range("apply_gate: qubit out of range");
    c64* amps = state.mutable_amplitudes().data();
    const std::size_t count = state.size();
    const auto& k = kernels::active_kernels();
    if (g.kind == GateKind::CX) {
        if (g.target < 0 || g.target >= n)
            throw std::out_of_range("apply_gate: CX target out of range");
        if (g.target == g.qubit)
            throw std::invalid_argument("apply_gate: CX control equals target");
        k.apply_cx(amps, count, bit_mask(n, g.qubit), bit_mask(n, g.target));
        return;
    }
    const auto m = g.matrix2();
    k.apply_matrix2(amps, count, bit_mask(n, g.qubit), m.data());
}

}  // namespace

StateVector apply_gate(const StateVector& state, const Gate& g) {
    StateVector out = state;
    apply_in_place(out, g);
    return out;
}

StateVector run_circuit(const Circuit& c, const StateVector& initial) {
    if (c.n_qubits() != initial.n_qubits())
        throw std::invalid_argument("run_circuit: circuit and state sizes differ");
    StateVector out = initial;
    for (const Gate& g : c.gates()) apply_in_place(out, g);
    return out;
}

std::vector<double> exact_probabilities(const StateVector& state) {
    std::vector<double> out(state.size());
    kernels::active_kernels().probabilities(state.amplitudes().data(), state.size(), out.data());
    return out;
}

}  // namespace spinsim
