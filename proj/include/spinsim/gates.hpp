// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "spinsim/statevector.hpp"

namespace spinsim {

// Native gate set of the target devices plus the composite U3 rotation:
// identity, Pauli-X, sqrt(X), Rz(phi), controlled-NOT, U3(theta,phi,lambda).
enum class GateKind { Id, X, SX, RZ, CX, U3 };

/// One gate application. Single-qubit kinds use `qubit`; CX uses
/// `qubit` as control and `target` as target.
struct Gate {
    GateKind kind = GateKind::Id;
    int qubit = 0;
    int target = 0;        // CX only
    double theta = 0.0;    // U3
    double phi = 0.0;      // RZ angle, U3 phi
    double lambda = 0.0;   // U3

    static Gate id(int q) { return {GateKind::Id, q, 0, 0, 0, 0}; }
    static Gate x(int q) { return {GateKind::X, q, 0, 0, 0, 0}; }
    static Gate sx(int q) { return {GateKind::SX, q, 0, 0, 0, 0}; }
    static Gate rz(int q, double phi) { return {GateKind::RZ, q, 0, 0, phi, 0}; }
    static Gate cx(int control, int target) { return {GateKind::CX, control, target, 0, 0, 0}; }
    static Gate u3(int q, double theta, double phi, double lambda) {
        return {GateKind::U3, q, 0, theta, phi, lambda};
    }

    bool is_two_qubit() const { return kind == GateKind::CX; }

    /// 2x2 unitary of a single-qubit gate, row-major. Throws for CX.
    std::array<c64, 4> matrix2() const;
};

/// U3 matrix: [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(l+p)} cos(t/2)]].
std::array<c64, 4> u3_matrix(double theta, double phi, double lambda);

// Rz convention fixed as diag(e^{-i phi/2}, e^{+i phi/2}); all circuit
// equivalences in this library are global-phase invariant.
std::array<c64, 4> rz_matrix(double phi);
std::array<c64, 4> sx_matrix();

/// Native decomposition of U3 in application order:
/// Rz(lambda), SX, Rz(theta - pi), SX, Rz(phi + pi).
/// The matrix product equals u3_matrix up to a global phase.
std::vector<Gate> u3_decompose(int qubit, double theta, double phi, double lambda);

}  // namespace spinsim
