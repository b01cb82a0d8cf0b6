// SPDX-License-Identifier: Apache-2.0
#include "spinsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spinsim/sampling.hpp"
#include "spinsim/simulate.hpp"

namespace spinsim {

void SweepConfig::validate() const {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!std::isfinite(max_param) || max_param < 0.0)
        throw std::invalid_argument("sweep: max_param must be finite and >= 0");
    if (!exact && shots < 1) throw std::invalid_argument("sweep: shots must be >= 1");
    if (experiment == Experiment::magfield) {
        if (initial == InitialState::x_polarized)
            throw std::invalid_argument(
                "sweep: magfield starts from m=+1 or m=0 (x-polarized is the ising initial)");
    } else {
        if (initial != InitialState::x_polarized)
            throw std::invalid_argument("sweep: ising starts from the x-polarized state");
    }
    if (noise) noise->validate();
}

double SweepConfig::grid_point(int i) const {
    return max_param * double(i) / double(steps - 1);
}

namespace {

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Estimate exact_estimate(double value) {
    Estimate e;
    e.value = value;
    return e;
}

Estimate sampled_prob_estimate(double p, std::uint64_t shots) {
    Estimate e;
    e.value = p;
    e.mode = Estimate::Mode::sampled;
    e.shots = shots;
    const double var = p * (1.0 - p) / double(shots);
    e.stderr_ = var > 0.0 ? std::sqrt(var) : 0.0;
    return e;
}

/// Outcome distribution of one measurement configuration: evolution circuit
/// plus rotation fragments, through the noise pipeline when configured.
std::vector<double> measured_distribution(const Circuit& evolution,
                                          const std::vector<Gate>& fragments,
                                          const StateVector& initial,
                                          const std::optional<DeviceParams>& noise) {
    Circuit full = evolution;
    full.append(fragments);
    if (!noise) return exact_probabilities(run_circuit(full, initial));
    const DepolarizingSpec depol{noise->single_qubit_gate_error, noise->cx_gate_error, 1e-9};
    const auto probs = apply_depolarizing(initial, full, depol);
    return apply_readout_noise(
        probs, ReadoutMatrix::symmetric(full.n_qubits(), noise->readout_error_per_qubit));
}

struct PointContext {
    const SweepConfig& cfg;
    Circuit evolution;
    StateVector initial;
    SpinRegister reg;
    std::uint64_t point_seed;

    std::vector<double> distribution(const std::vector<Gate>& fragments) const {
        return measured_distribution(evolution, fragments, initial, cfg.noise);
    }

    /// Weight-class probabilities of the z-basis measurement (estimator 0).
    std::array<Estimate, 3> probability_estimates() const {
        const auto dist = distribution({});
        std::array<Estimate, 3> out{};
        if (cfg.exact) {
            const auto pm = magnetic_number_probabilities(dist, evolution.n_qubits(), reg);
            for (int k = 0; k < 3; ++k) out[k] = exact_estimate(pm[k]);
        } else {
            const auto counts = sample_counts(dist, evolution.n_qubits(), cfg.shots,
                                              SplitMix64::split(point_seed, 0));
            const auto pm = magnetic_number_probabilities(counts, reg);
            for (int k = 0; k < 3; ++k) out[k] = sampled_prob_estimate(pm[k], cfg.shots);
        }
        return out;
    }

    Estimate mean_estimate(Axis axis, std::uint64_t estimator_ordinal) const {
        const auto dist = distribution(axis_rotation_fragment(reg, axis));
        if (cfg.exact) return mean_from_distribution(dist, evolution.n_qubits(), reg);
        const auto counts = sample_counts(dist, evolution.n_qubits(), cfg.shots,
                                          SplitMix64::split(point_seed, estimator_ordinal));
        return mean_component(counts, reg);
    }

    Estimate correlation_estimate(const SpinRegister& reg_j, std::uint64_t estimator_ordinal) const {
        std::vector<Gate> fragments = axis_rotation_fragment(reg, Axis::x);
        const auto frag_j = axis_rotation_fragment(reg_j, Axis::x);
        fragments.insert(fragments.end(), frag_j.begin(), frag_j.end());
        const auto dist = distribution(fragments);
        if (cfg.exact)
            return correlation_from_distribution(dist, evolution.n_qubits(), reg, reg_j,
                                                 EigenvalueConvention::spin,
                                                 EigenvalueConvention::pauli);
        const auto counts = sample_counts(dist, evolution.n_qubits(), cfg.shots,
                                          SplitMix64::split(point_seed, estimator_ordinal));
        return correlation(counts, reg, reg_j, EigenvalueConvention::spin,
                           EigenvalueConvention::pauli);
    }

    double leakage() const {
        if (!cfg.noise) return singlet_leakage(run_circuit(evolution, initial), reg);
        const DepolarizingSpec depol{cfg.noise->single_qubit_gate_error,
                                     cfg.noise->cx_gate_error, 1e-9};
        return depolarized_leakage(initial, evolution, reg, depol);
    }
};

SweepRow magfield_point(const SweepConfig& cfg, int index) {
    const double t = cfg.grid_point(index);
    const SpinValue spin1 = SpinValue::from_twice(2);
    const int initial_m = cfg.initial == InitialState::m_plus1 ? 1 : 0;
    const SpinRegister reg(spin1, 0);

    PointContext ctx{cfg,
                     magnetic_field_circuit(FieldSpec{t, {1.0, 0.0, 0.0}}, reg, 2),
                     dicke_state(spin1, MagneticQuantumNumber::from_twice(spin1, 2 * initial_m)),
                     reg,
                     SplitMix64::split(cfg.seed, std::uint64_t(index))};

    SweepRow row;
    row.param = t;
    row.prob_m = ctx.probability_estimates();
    row.mean = {ctx.mean_estimate(Axis::x, 1), ctx.mean_estimate(Axis::y, 2),
                ctx.mean_estimate(Axis::z, 3)};
    row.mean_magnitude = magnitude_estimate(row.mean);
    row.analytic_prob = analytic_field_probabilities(initial_m, t);
    row.analytic_mean = analytic_field_means(initial_m, t);
    row.analytic_magnitude = norm3(row.analytic_mean);
    row.leakage = ctx.leakage();
    return row;
}

SweepRow ising_point(const SweepConfig& cfg, int index) {
    const double jt = cfg.grid_point(index);
    const SpinRegister reg1 = ising_spin1_register();
    const SpinRegister reg2 = ising_spin_half_register();

    PointContext ctx{cfg, ising_circuit(IsingSpec{jt}), StateVector::zero_state(3), reg1,
                     SplitMix64::split(cfg.seed, std::uint64_t(index))};

    SweepRow row;
    row.param = jt;
    row.prob_m = ctx.probability_estimates();
    row.mean = {ctx.mean_estimate(Axis::x, 1), ctx.mean_estimate(Axis::y, 2),
                ctx.mean_estimate(Axis::z, 3)};
    row.mean_magnitude = magnitude_estimate(row.mean);
    row.corr_xx = ctx.correlation_estimate(reg2, 4);
    const IsingAnalytic ref = analytic_ising(jt);
    row.analytic_magnitude = ref.mean_magnitude;
    row.analytic_corr = ref.xx_correlation;
    row.leakage = ctx.leakage();
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<SweepRow> rows(cfg.steps);

    auto compute = [&](int i) {
        rows[i] = cfg.experiment == Experiment::magfield ? magfield_point(cfg, i)
                                                         : ising_point(cfg, i);
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned n_threads = std::min<unsigned>(hw ? hw : 1, unsigned(cfg.steps));
    if (n_threads <= 1) {
        for (int i = 0; i < cfg.steps; ++i) compute(i);
        return rows;
    }

    // Points are independent; grid order of `rows` is fixed by index, so the
    // result does not depend on scheduling.
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < cfg.steps; i = next.fetch_add(1)) {
            try {
                compute(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return rows;
}

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);  // fold -0
    return buf;
}

}  // namespace

std::vector<std::string> csv_columns(const SweepConfig& cfg) {
    std::vector<std::string> cols{"param",  "p_plus1", "p_0",    "p_minus1",
                                  "mean_x", "mean_y",  "mean_z", "mean_magnitude"};
    if (cfg.experiment == Experiment::ising) cols.push_back("corr_xx");
    if (cfg.experiment == Experiment::magfield) {
        for (const char* c : {"analytic_p_plus1", "analytic_p_0", "analytic_p_minus1",
                              "analytic_mean_x", "analytic_mean_y", "analytic_mean_z"})
            cols.push_back(c);
    }
    cols.push_back("analytic_mean_magnitude");
    if (cfg.experiment == Experiment::ising) cols.push_back("analytic_corr_xx");
    cols.push_back("leakage");
    for (const char* c : {"stderr_p_plus1", "stderr_p_0", "stderr_p_minus1", "stderr_mean_x",
                          "stderr_mean_y", "stderr_mean_z", "stderr_mean_magnitude"})
        cols.push_back(c);
    if (cfg.experiment == Experiment::ising) cols.push_back("stderr_corr_xx");
    return cols;
}

void export_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg, std::ostream& out) {
    const auto cols = csv_columns(cfg);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const SweepRow& r : rows) {
        std::vector<double> vals{r.param,
                                 r.prob_m[0].value,
                                 r.prob_m[1].value,
                                 r.prob_m[2].value,
                                 r.mean[0].value,
                                 r.mean[1].value,
                                 r.mean[2].value,
                                 r.mean_magnitude.value};
        if (cfg.experiment == Experiment::ising) vals.push_back(r.corr_xx.value);
        if (cfg.experiment == Experiment::magfield) {
            for (double v : r.analytic_prob) vals.push_back(v);
            for (double v : r.analytic_mean) vals.push_back(v);
        }
        vals.push_back(r.analytic_magnitude);
        if (cfg.experiment == Experiment::ising) vals.push_back(r.analytic_corr);
        vals.push_back(r.leakage);
        for (const Estimate* e :
             {&r.prob_m[0], &r.prob_m[1], &r.prob_m[2], &r.mean[0], &r.mean[1], &r.mean[2],
              &r.mean_magnitude})
            vals.push_back(e->stderr_);
        if (cfg.experiment == Experiment::ising) vals.push_back(r.corr_xx.stderr_);
        for (std::size_t i = 0; i < vals.size(); ++i)
            out << (i ? "," : "") << format_value(vals[i]);
        out << "\n";
    }
}

void export_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg,
                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open CSV output file: " + path);
    export_csv(rows, cfg, out);
    if (!out) throw std::runtime_error("failed writing CSV output file: " + path);
}

namespace {

double vec_norm(const std::vector<c64>& v) {
    double s = 0.0;
    for (const c64& x : v) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace

double AlgebraResiduals::max_residual() const {
    double m = commutator;
    m = std::max(m, casimir);
    m = std::max(m, sz_eigen);
    m = std::max(m, orthonormality);
    return std::max(m, closure);
}

bool AlgebraReport::all_within_tolerance() const {
    for (const auto& r : per_spin)
        if (r.max_residual() >= tolerance) return false;
    return true;
}

AlgebraReport algebra_check(int max_twice_s) {
    if (max_twice_s < 1 || max_twice_s > kMaxDenseQubits)
        throw std::invalid_argument("algebra_check: 2s must be in [1, 12]");
    AlgebraReport report;
    for (int twice_s = 1; twice_s <= max_twice_s; ++twice_s) {
        const SpinValue s = SpinValue::from_twice(twice_s);
        const double s_val = s.value();
        const DenseOperator ops[3] = {collective_operator(s, Axis::x),
                                      collective_operator(s, Axis::y),
                                      collective_operator(s, Axis::z)};
        AlgebraResiduals res;
        res.twice_s = twice_s;

        // [S^a, S^b] = i eps_abc S^c over the cyclic triples.
        for (int a = 0; a < 3; ++a) {
            const int b = (a + 1) % 3, c = (a + 2) % 3;
            const DenseOperator lhs = ops[a] * ops[b] - ops[b] * ops[a];
            res.commutator =
                std::max(res.commutator, (lhs - ops[c].scaled(c64{0.0, 1.0})).max_abs());
        }

        const DenseOperator casimir = casimir_operator(s);
        const auto ms = magnetic_numbers(s);
        std::vector<StateVector> dicke;
        dicke.reserve(ms.size());
        for (const auto& m : ms) dicke.push_back(dicke_state(s, m));

        for (std::size_t i = 0; i < ms.size(); ++i) {
            const auto& d = dicke[i];
            // (S.S - s(s+1)) |s,m>
            auto v = casimir.apply(d.amplitudes());
            for (std::uint64_t b = 0; b < v.size(); ++b)
                v[b] -= s_val * (s_val + 1.0) * d.amplitude(b);
            res.casimir = std::max(res.casimir, vec_norm(v));
            // (S^z - m) |s,m>
            auto w = ops[2].apply(d.amplitudes());
            for (std::uint64_t b = 0; b < w.size(); ++b)
                w[b] -= ms[i].value() * d.amplitude(b);
            res.sz_eigen = std::max(res.sz_eigen, vec_norm(w));
            // orthonormality
            for (std::size_t j = 0; j < ms.size(); ++j) {
                c64 ov{0.0, 0.0};
                for (std::uint64_t b = 0; b < v.size(); ++b)
                    ov += std::conj(dicke[j].amplitude(b)) * d.amplitude(b);
                const double target = i == j ? 1.0 : 0.0;
                res.orthonormality = std::max(res.orthonormality, std::abs(ov - target));
            }
            // closure of S^a |s,m> within the Dicke span
            for (const auto& op : ops) {
                auto u = op.apply(d.amplitudes());
                for (const auto& dj : dicke) {
                    c64 coef{0.0, 0.0};
                    for (std::uint64_t b = 0; b < u.size(); ++b)
                        coef += std::conj(dj.amplitude(b)) * u[b];
                    for (std::uint64_t b = 0; b < u.size(); ++b) u[b] -= coef * dj.amplitude(b);
                }
                res.closure = std::max(res.closure, vec_norm(u));
            }
        }
        report.per_spin.push_back(res);
    }
    return report;
}

}  // namespace spinsim
