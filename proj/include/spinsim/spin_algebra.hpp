// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "spinsim/dense.hpp"
#include "spinsim/spin.hpp"
#include "spinsim/statevector.hpp"

namespace spinsim {

enum class Axis { x, y, z };

/// |s,m> as an N = 2s qubit state: the uniform superposition of all
/// bitstrings of Hamming weight s - m, normalized by 1/sqrt(C(N, s-m)).
StateVector dicke_state(const SpinValue& s, const MagneticQuantumNumber& m);

/// Collective spin component S^axis = (1/2) sum_i sigma_i^axis as a dense
/// 2^N x 2^N matrix. Hermitian by construction.
DenseOperator collective_operator(const SpinValue& s, Axis axis);

/// S.S = (S^x)^2 + (S^y)^2 + (S^z)^2.
DenseOperator casimir_operator(const SpinValue& s);

/// Probability weight of `state` outside the symmetric (Dicke) subspace of
/// the register: 1 - sum_m ||(<s,m| (x) I_rest) |psi>||^2. In [0, 1]; zero
/// exactly when the register carries a pure spin-s.
double singlet_leakage(const StateVector& state, const SpinRegister& reg);

/// sum_m C_m |s,m>: expands a spin state into its qubit register.
StateVector spin_state_to_statevector(const SpinState& ss);

/// C(n, k) in exact integer arithmetic (n <= 62).
std::uint64_t binomial(int n, int k);

}  // namespace spinsim
