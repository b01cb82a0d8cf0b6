// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinsim/statevector.hpp"

namespace spinsim {

// Dense matrices exist for algebra verification and test oracles, not for
// production simulation paths; they are capped at 12 qubits (dim 4096).
inline constexpr int kMaxDenseQubits = 12;

class DenseOperator {
public:
    explicit DenseOperator(std::uint64_t dim);
    static DenseOperator identity(std::uint64_t dim);

    std::uint64_t dim() const { return dim_; }
    c64& at(std::uint64_t row, std::uint64_t col) { return entries_[row * dim_ + col]; }
    const c64& at(std::uint64_t row, std::uint64_t col) const { return entries_[row * dim_ + col]; }
    std::span<const c64> entries() const { return entries_; }

    DenseOperator operator+(const DenseOperator& rhs) const;
    DenseOperator operator-(const DenseOperator& rhs) const;
    DenseOperator operator*(const DenseOperator& rhs) const;
    DenseOperator scaled(c64 factor) const;
    DenseOperator adjoint() const;

    std::vector<c64> apply(std::span<const c64> vec) const;

    /// Largest entrywise |a_ij|.
    double max_abs() const;
    bool is_hermitian(double tol) const;

private:
    std::uint64_t dim_;
    std::vector<c64> entries_;
};

/// Kronecker product, row-major, left factor on the high-order bits
/// (consistent with qubit 0 = most significant).
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Embeds `op` (acting on `op_qubits` contiguous qubits starting at
/// `first_qubit`) into the identity on `n_total` qubits.
DenseOperator embed(const DenseOperator& op, int first_qubit, int op_qubits, int n_total);

DenseOperator pauli_matrix(char axis);  // 'x', 'y', 'z', or 'i'

}  // namespace spinsim
