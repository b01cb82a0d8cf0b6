// SPDX-License-Identifier: Apache-2.0
#include "spinsim/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinsim {

std::vector<MagneticQuantumNumber> magnetic_numbers(const SpinValue& s) {
    std::vector<MagneticQuantumNumber> ms;
    ms.reserve(s.multiplicity());
    for (int tm = s.twice_s(); tm >= -s.twice_s(); tm -= 2)
        ms.push_back(MagneticQuantumNumber::from_twice(s, tm));
    return ms;
}

std::vector<int> SpinRegister::qubits() const {
    std::vector<int> qs(qubit_count());
    for (int i = 0; i < qubit_count(); ++i) qs[i] = first_qubit + i;
    return qs;
}

SpinState::SpinState(SpinValue spin, std::vector<c64> amplitudes)
    : spin(spin), amplitudes(std::move(amplitudes)) {
    if (this->amplitudes.size() != std::size_t(spin.multiplicity()))
        throw std::invalid_argument("SpinState: amplitude count must be 2s+1");
    double norm = 0.0;
    for (const c64& a : this->amplitudes) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kNormTolerance)
        throw std::invalid_argument("SpinState: amplitudes are not normalized");
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * std::uint64_t(n - k + i) / std::uint64_t(i);
    return c;
}

namespace {

// Iterates bitstrings of fixed Hamming weight in increasing order
// (Gosper's hack). weight >= 1; callers handle weight 0 separately.
template <typename F>
void for_each_weight(int n_bits, int weight, F&& f) {
    const std::uint64_t limit = std::uint64_t{1} << n_bits;
    std::uint64_t v = (std::uint64_t{1} << weight) - 1;
    while (v < limit) {
        f(v);
        const std::uint64_t c = v & -v;
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

}  // namespace

StateVector dicke_state(const SpinValue& s, const MagneticQuantumNumber& m) {
    if (m.twice_m() > s.twice_s() || m.twice_m() < -s.twice_s() ||
        ((s.twice_s() - m.twice_m()) & 1) != 0)
        throw std::invalid_argument("dicke_state: m is not valid for this spin");
    const int n = s.qubit_count();
    const int weight = (s.twice_s() - m.twice_m()) / 2;  // number of flipped qubits, s - m
    const double amp = 1.0 / std::sqrt(double(binomial(n, weight)));
    std::vector<c64> amps(std::uint64_t{1} << n, c64{0.0, 0.0});
    if (weight == 0) {
        amps[0] = c64{1.0, 0.0};
    } else {
        // The basis index uses qubit 0 as the most significant bit, but
        // Hamming weight is position-independent, so any enumeration works.
        for_each_weight(n, weight, [&](std::uint64_t v) { amps[v] = c64{amp, 0.0}; });
    }
    return StateVector::from_amplitudes(std::move(amps));
}

DenseOperator collective_operator(const SpinValue& s, Axis axis) {
    const int n = s.qubit_count();
    // Cartesian Pauli vector pinned explicitly as (sigma^x, sigma^y, sigma^z);
    // the z component is sigma^z (printed references occasionally typo it).
    const char ax = axis == Axis::x ? 'x' : axis == Axis::y ? 'y' : 'z';
    DenseOperator sum(std::uint64_t{1} << n);
    for (int q = 0; q < n; ++q) sum = sum + embed(pauli_matrix(ax), q, 1, n);
    return sum.scaled(c64{0.5, 0.0});
}

DenseOperator casimir_operator(const SpinValue& s) {
    const DenseOperator sx = collective_operator(s, Axis::x);
    const DenseOperator sy = collective_operator(s, Axis::y);
    const DenseOperator sz = collective_operator(s, Axis::z);
    return sx * sx + sy * sy + sz * sz;
}

double singlet_leakage(const StateVector& state, const SpinRegister& reg) {
    const int n = state.n_qubits();
    const int nr = reg.qubit_count();
    if (reg.first_qubit < 0 || reg.past_end() > n)
        throw std::out_of_range("singlet_leakage: register outside the state");

    // Index split around the register (qubit 0 = most significant bit):
    // index = hi * 2^(n - first) + r * 2^(n - first - nr) + lo.
    const int lo_bits = n - reg.past_end();
    const std::uint64_t lo_dim = std::uint64_t{1} << lo_bits;
    const std::uint64_t hi_dim = std::uint64_t{1} << reg.first_qubit;
    const std::uint64_t reg_dim = std::uint64_t{1} << nr;
    const auto amps = state.amplitudes();

    double symmetric_weight = 0.0;
    for (const auto& m : magnetic_numbers(reg.spin)) {
        const StateVector dicke = dicke_state(reg.spin, m);
        const auto d = dicke.amplitudes();
        // || (<s,m| (x) I_rest) |psi> ||^2, accumulated over the rest-space.
        for (std::uint64_t hi = 0; hi < hi_dim; ++hi) {
            for (std::uint64_t lo = 0; lo < lo_dim; ++lo) {
                c64 overlap{0.0, 0.0};
                const std::uint64_t base = hi * (reg_dim * lo_dim) + lo;
                for (std::uint64_t r = 0; r < reg_dim; ++r)
                    overlap += std::conj(d[r]) * amps[base + r * lo_dim];
                symmetric_weight += std::norm(overlap);
            }
        }
    }
    // Clamp tiny negative round-off.
    const double leak = 1.0 - symmetric_weight;
    return leak < 0.0 ? 0.0 : leak;
}

StateVector spin_state_to_statevector(const SpinState& ss) {
    const auto ms = magnetic_numbers(ss.spin);
    std::vector<c64> amps(std::uint64_t{1} << ss.spin.qubit_count(), c64{0.0, 0.0});
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ss.amplitudes[i] == c64{0.0, 0.0}) continue;
        const StateVector d = dicke_state(ss.spin, ms[i]);
        const auto da = d.amplitudes();
        for (std::uint64_t b = 0; b < amps.size(); ++b) amps[b] += ss.amplitudes[i] * da[b];
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace spinsim
