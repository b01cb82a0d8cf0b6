// SPDX-License-Identifier: Apache-2.0
#include "spinsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinsim/circuit.hpp"

namespace spinsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::array<c64, 4> u3_matrix(double theta, double phi, double lambda) {
    if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(lambda))
        throw std::invalid_argument("u3_matrix: angles must be finite");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const c64 el = std::polar(1.0, lambda);
    const c64 ep = std::polar(1.0, phi);
    const c64 elp = std::polar(1.0, lambda + phi);
    return {c64{c, 0.0}, -el * s, ep * s, elp * c};
}

std::array<c64, 4> rz_matrix(double phi) {
    return {std::polar(1.0, -0.5 * phi), c64{0.0, 0.0}, c64{0.0, 0.0}, std::polar(1.0, 0.5 * phi)};
}

std::array<c64, 4> sx_matrix() {
    return {c64{0.5, 0.5}, c64{0.5, -0.5}, c64{0.5, -0.5}, c64{0.5, 0.5}};
}

std::array<c64, 4> Gate::matrix2() const {
    switch (kind) {
        case GateKind::Id:
            return {c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{1, 0}};
        case GateKind::X:
            return {c64{0, 0}, c64{1, 0}, c64{1, 0}, c64{0, 0}};
        case GateKind::SX:
            return sx_matrix();
        case GateKind::RZ:
            return rz_matrix(phi);
        case GateKind::U3:
            return u3_matrix(theta, phi, lambda);
        case GateKind::CX:
            break;
    }
    throw std::logic_error("Gate::matrix2: CX has no single-qubit matrix");
}

std::vector<Gate> u3_decompose(int qubit, double theta, double phi, double lambda) {
    if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(lambda))
        throw std::invalid_argument("u3_decompose: angles must be finite");
    return {Gate::rz(qubit, lambda), Gate::sx(qubit), Gate::rz(qubit, theta - kPi),
            Gate::sx(qubit), Gate::rz(qubit, phi + kPi)};
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("Circuit: qubit count out of range");
}

Circuit& Circuit::append(const Gate& g) {
    if (g.qubit < 0 || g.qubit >= n_qubits_)
        throw std::out_of_range("Circuit: gate qubit index out of range");
    if (g.kind == GateKind::CX) {
        if (g.target < 0 || g.target >= n_qubits_)
            throw std::out_of_range("Circuit: CX target index out of range");
        if (g.target == g.qubit)
            throw std::invalid_argument("Circuit: CX control and target must differ");
    }
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gs) {
    for (const Gate& g : gs) append(g);
    return *this;
}

std::size_t Circuit::count_kind(GateKind kind) const {
    std::size_t n = 0;
    for (const Gate& g : gates_)
        if (g.kind == kind) ++n;
    return n;
}

}  // namespace spinsim
