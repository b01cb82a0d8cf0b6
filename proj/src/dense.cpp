// SPDX-License-Identifier: Apache-2.0
#include "spinsim/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace spinsim {

namespace {

void check_dim(std::uint64_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("DenseOperator: dimension must be a power of two");
    if (dim > (std::uint64_t{1} << kMaxDenseQubits))
        throw std::invalid_argument("DenseOperator: dense matrices are capped at 12 qubits");
}

}  // namespace

DenseOperator::DenseOperator(std::uint64_t dim) : dim_(dim), entries_(dim * dim, c64{0.0, 0.0}) {
    check_dim(dim);
}

DenseOperator DenseOperator::identity(std::uint64_t dim) {
    DenseOperator op(dim);
    for (std::uint64_t i = 0; i < dim; ++i) op.at(i, i) = c64{1.0, 0.0};
    return op;
}

DenseOperator DenseOperator::operator+(const DenseOperator& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("DenseOperator: dimension mismatch");
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

DenseOperator DenseOperator::operator-(const DenseOperator& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("DenseOperator: dimension mismatch");
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("DenseOperator: dimension mismatch");
    DenseOperator out(dim_);
    // i-k-j loop order keeps the inner loop contiguous in both factors.
    for (std::uint64_t i = 0; i < dim_; ++i) {
        for (std::uint64_t k = 0; k < dim_; ++k) {
            const c64 a = at(i, k);
            if (a == c64{0.0, 0.0}) continue;
            const c64* brow = &rhs.entries_[k * dim_];
            c64* orow = &out.entries_[i * dim_];
            for (std::uint64_t j = 0; j < dim_; ++j) orow[j] += a * brow[j];
        }
    }
    return out;
}

DenseOperator DenseOperator::scaled(c64 factor) const {
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = factor * entries_[i];
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim_);
    for (std::uint64_t i = 0; i < dim_; ++i)
        for (std::uint64_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

std::vector<c64> DenseOperator::apply(std::span<const c64> vec) const {
    if (vec.size() != dim_) throw std::invalid_argument("DenseOperator: vector size mismatch");
    std::vector<c64> out(dim_, c64{0.0, 0.0});
    for (std::uint64_t i = 0; i < dim_; ++i) {
        const c64* row = &entries_[i * dim_];
        c64 acc{0.0, 0.0};
        for (std::uint64_t j = 0; j < dim_; ++j) acc += row[j] * vec[j];
        out[i] = acc;
    }
    return out;
}

double DenseOperator::max_abs() const {
    double m = 0.0;
    for (const c64& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool DenseOperator::is_hermitian(double tol) const {
    for (std::uint64_t i = 0; i < dim_; ++i)
        for (std::uint64_t j = i; j < dim_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    DenseOperator out(a.dim() * b.dim());
    for (std::uint64_t ia = 0; ia < a.dim(); ++ia)
        for (std::uint64_t ja = 0; ja < a.dim(); ++ja) {
            const c64 f = a.at(ia, ja);
            if (f == c64{0.0, 0.0}) continue;
            for (std::uint64_t ib = 0; ib < b.dim(); ++ib)
                for (std::uint64_t jb = 0; jb < b.dim(); ++jb)
                    out.at(ia * b.dim() + ib, ja * b.dim() + jb) = f * b.at(ib, jb);
        }
    return out;
}

DenseOperator embed(const DenseOperator& op, int first_qubit, int op_qubits, int n_total) {
    if (op.dim() != (std::uint64_t{1} << op_qubits))
        throw std::invalid_argument("embed: operator dimension does not match op_qubits");
    if (first_qubit < 0 || first_qubit + op_qubits > n_total)
        throw std::out_of_range("embed: register outside the system");
    const int right = n_total - first_qubit - op_qubits;
    DenseOperator out = op;
    if (first_qubit > 0) out = kron(DenseOperator::identity(std::uint64_t{1} << first_qubit), out);
    if (right > 0) out = kron(out, DenseOperator::identity(std::uint64_t{1} << right));
    return out;
}

DenseOperator pauli_matrix(char axis) {
    DenseOperator m(2);
    switch (axis) {
        case 'x':
            m.at(0, 1) = c64{1, 0};
            m.at(1, 0) = c64{1, 0};
            return m;
        case 'y':
            m.at(0, 1) = c64{0, -1};
            m.at(1, 0) = c64{0, 1};
            return m;
        case 'z':
            m.at(0, 0) = c64{1, 0};
            m.at(1, 1) = c64{-1, 0};
            return m;
        case 'i':
            return DenseOperator::identity(2);
        default:
            throw std::invalid_argument("pauli_matrix: axis must be x, y, z or i");
    }
}

}  // namespace spinsim
