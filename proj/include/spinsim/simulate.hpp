// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "spinsim/circuit.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

/// Applies one gate; the input state is unchanged. Norm is preserved to
/// floating-point accuracy.
StateVector apply_gate(const StateVector& state, const Gate& g);

/// Left-fold of apply_gate over the circuit's gate list (one working copy).
StateVector run_circuit(const Circuit& c, const StateVector& initial);

/// |amps|^2 entrywise.
std::vector<double> exact_probabilities(const StateVector& state);

}  // namespace spinsim
