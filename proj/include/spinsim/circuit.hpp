// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "spinsim/gates.hpp"

namespace spinsim {

/// Ordered gate list over a fixed number of qubits. Indices are validated on
/// append; a Circuit is immutable-by-convention once built.
class Circuit {
public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t gate_count() const { return gates_.size(); }

    Circuit& append(const Gate& g);
    Circuit& append(const std::vector<Gate>& gs);

    std::size_t count_kind(GateKind kind) const;

private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

}  // namespace spinsim
