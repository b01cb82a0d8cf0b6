// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "spinsim/gates.hpp"
#include "spinsim/models.hpp"
#include "spinsim/sampling.hpp"
#include "spinsim/simulate.hpp"
#include "test_util.hpp"

using namespace spinsim;
using test::kPi;

TEST_CASE("u3 matrix special cases") {
    const auto id = u3_matrix(0, 0, 0);
    CHECK(std::abs(id[0] - c64{1, 0}) < 1e-15);
    CHECK(std::abs(id[1]) < 1e-15);
    CHECK(std::abs(id[3] - c64{1, 0}) < 1e-15);

    // U(pi, 0, pi) = X by direct substitution.
    const auto x = u3_matrix(kPi, 0, kPi);
    CHECK(std::abs(x[0]) < 1e-15);
    CHECK(std::abs(x[1] - c64{1, 0}) < 1e-12);
    CHECK(std::abs(x[2] - c64{1, 0}) < 1e-12);
    CHECK(std::abs(x[3]) < 1e-15);

    // U(wt, -pi/2, pi/2) = exp(-i wt sigma^x / 2), checked against a series
    // expansion of the exponential.
    for (double wt : {0.3, 1.1, 2.9, 5.0}) {
        const auto u = u3_matrix(wt, -0.5 * kPi, 0.5 * kPi);
        const DenseOperator rx =
            test::dense_expm(pauli_matrix('x'), c64{0.0, -0.5 * wt});
        double dev = 0.0;
        dev = std::max(dev, std::abs(u[0] - rx.at(0, 0)));
        dev = std::max(dev, std::abs(u[1] - rx.at(0, 1)));
        dev = std::max(dev, std::abs(u[2] - rx.at(1, 0)));
        dev = std::max(dev, std::abs(u[3] - rx.at(1, 1)));
        CHECK(dev < 1e-13);
    }

    // Unitarity across random angles.
    SplitMix64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto m = u3_matrix(test::random_angle(rng), test::random_angle(rng),
                                 test::random_angle(rng));
        const double c00 = std::norm(m[0]) + std::norm(m[1]);
        const double c11 = std::norm(m[2]) + std::norm(m[3]);
        const c64 off = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
        CHECK(std::abs(c00 - 1.0) < 1e-12);
        CHECK(std::abs(c11 - 1.0) < 1e-12);
        CHECK(std::abs(off) < 1e-12);
    }

    CHECK_THROWS_AS(u3_matrix(std::nan(""), 0, 0), std::invalid_argument);
}

namespace {

/// 2x2 product of the native decomposition, last gate leftmost.
std::array<c64, 4> decomposition_product(const std::vector<Gate>& gates) {
    std::array<c64, 4> acc{c64{1, 0}, c64{0, 0}, c64{0, 0}, c64{1, 0}};
    for (const Gate& g : gates) {
        const auto m = g.matrix2();
        acc = {m[0] * acc[0] + m[1] * acc[2], m[0] * acc[1] + m[1] * acc[3],
               m[2] * acc[0] + m[3] * acc[2], m[2] * acc[1] + m[3] * acc[3]};
    }
    return acc;
}

double phase_invariant_gap(const std::array<c64, 4>& d, const std::array<c64, 4>& u) {
    // |tr(D^dag U)| = 2 exactly when D = U up to a global phase.
    const c64 tr = std::conj(d[0]) * u[0] + std::conj(d[1]) * u[1] + std::conj(d[2]) * u[2] +
                   std::conj(d[3]) * u[3];
    return std::abs(std::abs(tr) - 2.0);
}

}  // namespace

TEST_CASE("u3 native decomposition") {
    const auto seq = u3_decompose(0, 0.7, 1.9, 4.1);
    REQUIRE(seq.size() == 5);
    CHECK(seq[0].kind == GateKind::RZ);
    CHECK(seq[1].kind == GateKind::SX);
    CHECK(seq[2].kind == GateKind::RZ);
    CHECK(seq[3].kind == GateKind::SX);
    CHECK(seq[4].kind == GateKind::RZ);

    CHECK(phase_invariant_gap(decomposition_product(u3_decompose(0, 0, 0, 0)),
                              std::array<c64, 4>{c64{1, 0}, {}, {}, c64{1, 0}}) < 1e-12);
    CHECK(phase_invariant_gap(decomposition_product(u3_decompose(0, kPi, 0, kPi)),
                              std::array<c64, 4>{{{}, c64{1, 0}, c64{1, 0}, {}}}) < 1e-12);

    SplitMix64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double t = test::random_angle(rng), p = test::random_angle(rng),
                     l = test::random_angle(rng);
        CHECK(phase_invariant_gap(decomposition_product(u3_decompose(0, t, p, l)),
                                  u3_matrix(t, p, l)) < 1e-12);
    }
}

TEST_CASE("apply_gate basics") {
    // Qubit 0 is the most significant index bit: X on qubit 0 of |00> -> |10>.
    const StateVector s0 = StateVector::zero_state(2);
    const StateVector s1 = apply_gate(s0, Gate::x(0));
    CHECK(std::abs(s1.amplitude(2) - c64{1, 0}) < 1e-15);
    CHECK(std::abs(s0.amplitude(0) - c64{1, 0}) < 1e-15);  // input untouched

    const StateVector s2 = apply_gate(s1, Gate::cx(0, 1));
    CHECK(std::abs(s2.amplitude(3) - c64{1, 0}) < 1e-15);

    // RZ(phi)|0> = e^{-i phi/2}|0>, against the dense exponential.
    for (double phi : {0.4, 2.2}) {
        const StateVector r = apply_gate(StateVector::zero_state(1), Gate::rz(0, phi));
        const DenseOperator ez = test::dense_expm(pauli_matrix('z'), c64{0.0, -0.5 * phi});
        CHECK(std::abs(r.amplitude(0) - ez.at(0, 0)) < 1e-13);
    }

    CHECK_THROWS_AS(apply_gate(s0, Gate::x(2)), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s0, Gate::cx(0, 0)), std::invalid_argument);
}

TEST_CASE("run_circuit basics") {
    const StateVector init = StateVector::zero_state(2);

    CHECK(test::max_abs_diff(run_circuit(Circuit(2), init).amplitudes(), init.amplitudes()) ==
          0.0);

    Circuit xx(2);
    xx.append(Gate::x(0)).append(Gate::x(0));
    CHECK(test::max_abs_diff(run_circuit(xx, init).amplitudes(), init.amplitudes()) < 1e-15);

    // Field circuit at wt=pi maps |00> to |11| up to phase: cos^4 = 0, sin^4 = 1.
    const SpinRegister reg(SpinValue::from_twice(2), 0);
    const Circuit c = magnetic_field_circuit(FieldSpec{kPi, {1, 0, 0}}, reg, 2);
    const StateVector out = run_circuit(c, init);
    CHECK(std::abs(std::abs(out.amplitude(3)) - 1.0) < 1e-12);
}

TEST_CASE("exact probabilities") {
    CHECK(exact_probabilities(StateVector::zero_state(2)) ==
          std::vector<double>{1.0, 0.0, 0.0, 0.0});

    const double r = 1.0 / std::sqrt(2.0);
    const auto p =
        exact_probabilities(StateVector::from_amplitudes({{}, c64{r, 0}, c64{r, 0}, {}}));
    CHECK(p[0] == doctest::Approx(0.0));
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == doctest::Approx(0.5));

    // Field circuit at wt = pi/2: (1/4, 1/4, 1/4, 1/4).
    const SpinRegister reg(SpinValue::from_twice(2), 0);
    const Circuit c = magnetic_field_circuit(FieldSpec{0.5 * kPi, {1, 0, 0}}, reg, 2);
    const auto q = exact_probabilities(run_circuit(c, StateVector::zero_state(2)));
    for (double v : q) CHECK(v == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("norm preservation on random circuits") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 1 + int(rng.next_u64() % 5);
        const Circuit c = test::random_circuit(n, 200, rng);
        const StateVector out = run_circuit(c, test::random_state(n, rng));
        CHECK(std::abs(out.norm_sq() - 1.0) < 1e-10);
    }
}

TEST_CASE("kernel agrees with dense unitaries up to 4 qubits") {
    SplitMix64 rng(23);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const StateVector in = test::random_state(n, rng);
            const Gate g = test::random_gate(n, rng);
            const StateVector fast = apply_gate(in, g);
            const auto slow = test::gate_dense(g, n).apply(in.amplitudes());
            CHECK(test::max_abs_diff(fast.amplitudes(), slow) < 1e-12);
        }
    }
}

TEST_CASE("sampling") {
    // Deterministic outcomes for a basis state.
    const ShotCounts c0 = sample_counts(StateVector::zero_state(2), 1000, 42);
    REQUIRE(c0.counts.size() == 1);
    CHECK(c0.counts.at("00") == 1000);

    // Uniform two-qubit state: every outcome within 5 sigma of shots/4.
    const double r = 0.5;
    const StateVector uniform =
        StateVector::from_amplitudes({c64{r, 0}, c64{r, 0}, c64{r, 0}, c64{r, 0}});
    const ShotCounts cu = sample_counts(uniform, 4096, 7);
    const double sigma = std::sqrt(4096.0 * 0.25 * 0.75);
    for (const auto& [bits, n] : cu.counts)
        CHECK(std::abs(double(n) - 1024.0) < 5.0 * sigma);

    // Bitwise determinism.
    const ShotCounts a = sample_counts(uniform, 2048, 99);
    const ShotCounts b = sample_counts(uniform, 2048, 99);
    CHECK(a.counts == b.counts);

    CHECK_THROWS_AS(sample_counts(uniform, 0, 1), std::invalid_argument);
}

TEST_CASE("sampling consistency across shot scales") {
    // Frequencies converge to exact probabilities at the multinomial rate.
    const SpinRegister reg(SpinValue::from_twice(2), 0);
    const Circuit c = magnetic_field_circuit(FieldSpec{0.7, {1, 0, 0}}, reg, 2);
    const StateVector psi = run_circuit(c, StateVector::zero_state(2));
    const auto exact = exact_probabilities(psi);
    int ordinal = 0;
    for (std::uint64_t shots : {1u << 10, 1u << 14, 1u << 18}) {
        const auto counts = sample_counts(psi, shots, SplitMix64::split(3, ordinal++));
        const auto freq = counts.to_probabilities();
        for (std::size_t i = 0; i < exact.size(); ++i) {
            const double sigma = std::sqrt(exact[i] * (1.0 - exact[i]) / double(shots));
            CHECK(std::abs(freq[i] - exact[i]) <= 5.0 * sigma + 1e-12);
        }
    }
}

TEST_CASE("circuit validation and gate unitarity") {
    Circuit c(2);
    CHECK_THROWS_AS(c.append(Gate::x(2)), std::out_of_range);
    CHECK_THROWS_AS(c.append(Gate::cx(0, 2)), std::out_of_range);
    CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(Circuit(0), std::invalid_argument);

    // Every single-qubit kind's matrix is unitary.
    for (const Gate& g : {Gate::id(0), Gate::x(0), Gate::sx(0), Gate::rz(0, 1.234),
                          Gate::u3(0, 0.5, 1.5, 2.5)}) {
        const auto m = g.matrix2();
        CHECK(std::abs(std::norm(m[0]) + std::norm(m[1]) - 1.0) < 1e-12);
        CHECK(std::abs(std::norm(m[2]) + std::norm(m[3]) - 1.0) < 1e-12);
        CHECK(std::abs(m[0] * std::conj(m[2]) + m[1] * std::conj(m[3])) < 1e-12);
    }
    CHECK_THROWS_AS(Gate::cx(0, 1).matrix2(), std::logic_error);
}

TEST_CASE("statevector validation") {
    CHECK_THROWS_AS(StateVector::from_amplitudes({c64{1, 0}, c64{1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({c64{1, 0}, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis_state(2, 4), std::out_of_range);
    CHECK_THROWS_AS(StateVector::zero_state(25), std::invalid_argument);
    CHECK(StateVector::bitstring(2, 2) == "10");
    CHECK(StateVector::bitstring(1, 3) == "001");
}
