// SPDX-License-Identifier: Apache-2.0
#include "spinsim/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinsim/kernels.hpp"

namespace spinsim {

namespace {

int qubits_for_size(std::size_t size) {
    int n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    if ((std::size_t{1} << n) != size)
        throw std::invalid_argument("StateVector: amplitude count must be a power of two");
    return n;
}

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("StateVector: qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
}

}  // namespace

StateVector StateVector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) throw std::out_of_range("StateVector: basis index out of range");
    std::vector<c64> amps(dim, c64{0.0, 0.0});
    amps[index] = c64{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<c64> amps) {
    const int n = qubits_for_size(amps.size());
    check_qubit_count(n);
    StateVector sv(n, std::move(amps));
    if (std::abs(sv.norm_sq() - 1.0) > kNormTolerance)
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    return sv;
}

double StateVector::norm_sq() const {
    return kernels::active_kernels().norm_sq(amps_.data(), amps_.size());
}

std::string StateVector::bitstring(std::uint64_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q)
        if (index & bit_mask(n_qubits, q)) s[q] = '1';
    return s;
}

}  // namespace spinsim
