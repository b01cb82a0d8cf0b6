// SPDX-License-Identifier: Apache-2.0
#include "spinsim/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinsim {

namespace {
constexpr double kPi = std::numbers::pi;

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

/// U3 angles reproducing an arbitrary single-qubit unitary up to global
/// phase. Used for field directions outside the xy-plane.
Gate u3_from_matrix(int qubit, const std::array<c64, 4>& m) {
    const double theta = 2.0 * std::atan2(std::abs(m[2]), std::abs(m[0]));
    double phi = 0.0, lambda = 0.0;
    if (std::abs(m[2]) < 1e-12) {
        lambda = std::arg(m[3]) - std::arg(m[0]);  // diagonal: relative phase only
    } else if (std::abs(m[0]) < 1e-12) {
        lambda = std::arg(-m[1]) - std::arg(m[2]);  // antidiagonal
    } else {
        const double ref = std::arg(m[0]);
        phi = std::arg(m[2]) - ref;
        lambda = std::arg(-m[1]) - ref;
    }
    return Gate::u3(qubit, theta, phi, lambda);
}

}  // namespace

Circuit magnetic_field_circuit(const FieldSpec& spec, const SpinRegister& reg, int n_qubits) {
    const auto& n = spec.direction;
    if (std::abs(norm3(n) - 1.0) > 1e-12)
        throw std::invalid_argument("magnetic_field_circuit: direction must be a unit vector");
    if (reg.first_qubit < 0 || reg.past_end() > n_qubits)
        throw std::out_of_range("magnetic_field_circuit: register outside the circuit");

    Circuit c(n_qubits);
    if (std::abs(n[2]) <= 1e-12) {
        // Perpendicular field: theta = omega t, phi = alpha - pi/2,
        // lambda = -alpha + pi/2 with alpha = atan2(n_y, n_x). This U3 equals
        // e^{-i omega t (sigma.n)/2} exactly (no residual phase).
        const double alpha = std::atan2(n[1], n[0]);
        for (int q : reg.qubits())
            c.append(Gate::u3(q, spec.omega_t, alpha - 0.5 * kPi, -alpha + 0.5 * kPi));
        return c;
    }
    if (!spec.allow_longitudinal)
        throw std::invalid_argument(
            "magnetic_field_circuit: n_z != 0 requires allow_longitudinal");
    // General direction: exponentiate directly,
    // e^{-i a (sigma.n)} = cos(a) I - i sin(a) (sigma.n), a = omega t / 2.
    const double a = 0.5 * spec.omega_t;
    const double ca = std::cos(a), sa = std::sin(a);
    const std::array<c64, 4> u{c64{ca, -sa * n[2]}, c64{-sa * n[1], -sa * n[0]},
                               c64{sa * n[1], -sa * n[0]}, c64{ca, sa * n[2]}};
    for (int q : reg.qubits()) c.append(u3_from_matrix(q, u));
    return c;
}

SpinRegister ising_spin1_register() {
    return SpinRegister(SpinValue::from_twice(2), 0);
}

SpinRegister ising_spin_half_register() {
    return SpinRegister(SpinValue::from_twice(1), 2);
}

Circuit ising_evolution(const IsingSpec& spec) {
    // e^{-i Jt S_1^z sigma_2^z} splits into commuting two-qubit factors
    // e^{-i (Jt/2) sigma_a^z sigma_2^z}, each compiled CX - RZ(Jt) - CX.
    Circuit c(3);
    for (int a : {0, 1}) {
        c.append(Gate::cx(a, 2));
        c.append(Gate::rz(2, spec.jt));
        c.append(Gate::cx(a, 2));
    }
    return c;
}

Circuit ising_circuit(const IsingSpec& spec) {
    Circuit c(3);
    // Preparation: rotate each qubit onto +x, giving <S_1> = (1,0,0) and
    // <sigma_2^x> = 1 at Jt = 0.
    for (int q : {0, 1, 2}) c.append(Gate::u3(q, 0.5 * kPi, 0.0, 0.0));
    c.append(ising_evolution(spec).gates());
    return c;
}

std::vector<Gate> spin1_dicke_prep(const SpinRegister& reg, int twice_m) {
    if (reg.spin.twice_s() != 2)
        throw std::invalid_argument("spin1_dicke_prep: register must be spin-1");
    const int q0 = reg.first_qubit, q1 = reg.first_qubit + 1;
    switch (twice_m) {
        case 2:
            return {};  // |00>
        case -2:
            return {Gate::x(q0), Gate::x(q1)};
        case 0:
            // |00> -> (|01> + |10>)/sqrt(2): X, then a Hadamard (as U3) and CX.
            return {Gate::x(q1), Gate::u3(q0, 0.5 * kPi, 0.0, kPi), Gate::cx(q0, q1)};
        default:
            throw std::invalid_argument("spin1_dicke_prep: 2m must be -2, 0 or 2");
    }
}

std::array<double, 3> analytic_field_probabilities(int initial_m, double omega_t) {
    const double c = std::cos(0.5 * omega_t);
    const double s = std::sin(0.5 * omega_t);
    const double sw = std::sin(omega_t);
    switch (initial_m) {
        case 1:
            return {c * c * c * c, 0.5 * sw * sw, s * s * s * s};
        case 0: {
            const double cw = std::cos(omega_t);
            return {0.5 * sw * sw, cw * cw, 0.5 * sw * sw};
        }
        case -1:
            return {s * s * s * s, 0.5 * sw * sw, c * c * c * c};
        default:
            throw std::invalid_argument("analytic_field_probabilities: initial_m must be -1, 0, 1");
    }
}

std::array<double, 3> analytic_field_means(int initial_m, double omega_t) {
    switch (initial_m) {
        case 1:
            return {0.0, -std::sin(omega_t), std::cos(omega_t)};
        case 0:
            return {0.0, 0.0, 0.0};
        case -1:
            return {0.0, std::sin(omega_t), -std::cos(omega_t)};
        default:
            throw std::invalid_argument("analytic_field_means: initial_m must be -1, 0, 1");
    }
}

IsingAnalytic analytic_ising(double jt) {
    return {std::abs(std::cos(jt)), std::cos(jt)};
}

}  // namespace spinsim
