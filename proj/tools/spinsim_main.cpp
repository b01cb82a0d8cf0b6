// SPDX-License-Identifier: Apache-2.0
//
// spinsim CLI: parameter sweeps of the two experiments with CSV/SVG output,
// spin-algebra self-checks, and OpenQASM export.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "spinsim/kernels.hpp"
#include "spinsim/plot.hpp"
#include "spinsim/qasm.hpp"
#include "spinsim/simulate.hpp"
#include "spinsim/sweep.hpp"

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct SweepOptions {
    int steps = 41;
    double max_param = kTwoPi;
    std::uint64_t shots = 1024;
    bool exact = false;
    std::uint64_t seed = 7;
    std::string initial;
    std::string noise_path;
    std::string csv_path;
    std::string svg_path;
    std::string qasm_path;
    std::string config_path;
};

void add_sweep_flags(CLI::App* sub, SweepOptions& opt) {
    sub->add_option("--steps", opt.steps, "Grid points over [0, max-param]")
        ->check(CLI::Range(2, 100000));
    sub->add_option("--max-param", opt.max_param, "Sweep upper bound in radians (default 2*pi)");
    sub->add_option("--shots", opt.shots, "Shots per estimator and grid point")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    sub->add_flag("--exact", opt.exact, "Exact probabilities instead of finite shots");
    sub->add_option("--seed", opt.seed, "Sweep seed; points derive theirs by stream-splitting");
    sub->add_option("--noise", opt.noise_path, "Device parameter file (key=value)")
        ->check(CLI::ExistingFile);
    sub->add_option("--csv", opt.csv_path, "CSV output path (default: stdout)");
    sub->add_option("--svg", opt.svg_path, "SVG plot output path");
    sub->add_option("--qasm", opt.qasm_path,
                    "Export the evolution circuit at the last grid point as OpenQASM 2.0");
    sub->add_option("--config", opt.config_path,
                    "Flat key=value config file (same keys as the flags)")
        ->check(CLI::ExistingFile);
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" + v + "'");
}

/// Applies the config file under flag > config > default precedence:
/// keys matching a flag given on the command line are skipped.
void apply_config_file(CLI::App* sub, SweepOptions& opt) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + opt.config_path);
    auto overridden = [&](const char* flag) { return sub->count(flag) > 0; };
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key=value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key == "steps" && !overridden("--steps"))
            opt.steps = std::stoi(value);
        else if (key == "max-param" && !overridden("--max-param"))
            opt.max_param = std::stod(value);
        else if (key == "shots" && !overridden("--shots"))
            opt.shots = std::stoull(value);
        else if (key == "exact" && !overridden("--exact"))
            opt.exact = parse_bool(value, key);
        else if (key == "seed" && !overridden("--seed"))
            opt.seed = std::stoull(value);
        else if (key == "initial" && !overridden("--initial"))
            opt.initial = value;
        else if (key == "noise" && !overridden("--noise"))
            opt.noise_path = value;
        else if (key == "csv" && !overridden("--csv"))
            opt.csv_path = value;
        else if (key == "svg" && !overridden("--svg"))
            opt.svg_path = value;
        else if (key == "qasm" && !overridden("--qasm"))
            opt.qasm_path = value;
        else if (key != "steps" && key != "max-param" && key != "shots" && key != "exact" &&
                 key != "seed" && key != "initial" && key != "noise" && key != "csv" &&
                 key != "svg" && key != "qasm")
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
    }
}

spinsim::SweepConfig make_config(const SweepOptions& opt, spinsim::Experiment exp) {
    spinsim::SweepConfig cfg;
    cfg.experiment = exp;
    cfg.steps = opt.steps;
    cfg.max_param = opt.max_param;
    cfg.shots = opt.shots;
    cfg.exact = opt.exact;
    cfg.seed = opt.seed;
    if (exp == spinsim::Experiment::magfield) {
        if (opt.initial.empty() || opt.initial == "m+1")
            cfg.initial = spinsim::InitialState::m_plus1;
        else if (opt.initial == "m0")
            cfg.initial = spinsim::InitialState::m_zero;
        else
            throw std::invalid_argument("--initial must be m+1 or m0 for magfield");
    } else {
        if (!opt.initial.empty() && opt.initial != "x-polarized")
            throw std::invalid_argument("--initial must be x-polarized for ising");
        cfg.initial = spinsim::InitialState::x_polarized;
    }
    if (!opt.noise_path.empty()) cfg.noise = spinsim::load_device_params(opt.noise_path);
    return cfg;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

int run_sweep_command(const SweepOptions& opt, spinsim::Experiment exp) {
    const spinsim::SweepConfig cfg = make_config(opt, exp);
    const auto rows = spinsim::run_sweep(cfg);
    if (opt.csv_path.empty()) {
        spinsim::export_csv(rows, cfg, std::cout);
    } else {
        spinsim::export_csv(rows, cfg, opt.csv_path);
        std::cerr << "wrote " << opt.csv_path << "\n";
    }
    if (!opt.svg_path.empty()) {
        spinsim::render_plot(rows, cfg, opt.svg_path);
        std::cerr << "wrote " << opt.svg_path << "\n";
    }
    if (!opt.qasm_path.empty()) {
        const double last = cfg.grid_point(cfg.steps - 1);
        spinsim::Circuit c =
            exp == spinsim::Experiment::magfield
                ? [&] {
                      const spinsim::SpinRegister reg(spinsim::SpinValue::from_twice(2), 0);
                      spinsim::Circuit full(2);
                      const int m = cfg.initial == spinsim::InitialState::m_plus1 ? 2 : 0;
                      full.append(spinsim::spin1_dicke_prep(reg, m));
                      full.append(spinsim::magnetic_field_circuit(
                                      spinsim::FieldSpec{last, {1.0, 0.0, 0.0}}, reg, 2)
                                      .gates());
                      return full;
                  }()
                : spinsim::ising_circuit(spinsim::IsingSpec{last});
        write_text_file(opt.qasm_path, spinsim::qasm::emit(c, true));
        std::cerr << "wrote " << opt.qasm_path << "\n";
    }
    return 0;
}

int run_algebra_check(int max_twice_s) {
    const auto report = spinsim::algebra_check(max_twice_s);
    std::printf("spin-algebra self-check (kernels: %s, tolerance %.1e)\n",
                spinsim::kernels::active_kernels().name, report.tolerance);
    std::printf("%8s %12s %12s %12s %14s %12s\n", "2s", "commutator", "casimir", "sz-eigen",
                "orthonormality", "closure");
    for (const auto& r : report.per_spin)
        std::printf("%8d %12.3e %12.3e %12.3e %14.3e %12.3e\n", r.twice_s, r.commutator,
                    r.casimir, r.sz_eigen, r.orthonormality, r.closure);
    if (!report.all_within_tolerance()) {
        std::fprintf(stderr, "FAIL: residual above tolerance\n");
        return 2;
    }
    std::printf("all identities hold\n");
    return 0;
}

struct ExportOptions {
    std::string experiment;
    double param = 0.0;
    std::string initial = "m+1";
    std::string observable = "none";
    bool measure_all = false;
    std::string qasm_path;
};

int run_export_qasm(const ExportOptions& opt) {
    using namespace spinsim;
    Circuit c(1);
    SpinRegister reg1(SpinValue::from_twice(2), 0);
    if (opt.experiment == "magfield") {
        Circuit full(2);
        if (opt.initial == "m+1")
            full.append(spin1_dicke_prep(reg1, 2));
        else if (opt.initial == "m0")
            full.append(spin1_dicke_prep(reg1, 0));
        else
            throw std::invalid_argument("--initial must be m+1 or m0 for magfield");
        full.append(magnetic_field_circuit(FieldSpec{opt.param, {1.0, 0.0, 0.0}}, reg1, 2).gates());
        if (opt.observable == "mean-x")
            full.append(axis_rotation_fragment(reg1, Axis::x));
        else if (opt.observable == "mean-y")
            full.append(axis_rotation_fragment(reg1, Axis::y));
        else if (opt.observable != "none" && opt.observable != "mean-z")
            throw std::invalid_argument("magfield observables: none, mean-x, mean-y, mean-z");
        c = full;
    } else if (opt.experiment == "ising") {
        Circuit full = ising_circuit(IsingSpec{opt.param});
        if (opt.observable == "mean-x") {
            full.append(axis_rotation_fragment(reg1, Axis::x));
        } else if (opt.observable == "mean-y") {
            full.append(axis_rotation_fragment(reg1, Axis::y));
        } else if (opt.observable == "corr-xx") {
            full.append(axis_rotation_fragment(reg1, Axis::x));
            full.append(axis_rotation_fragment(ising_spin_half_register(), Axis::x));
        } else if (opt.observable != "none" && opt.observable != "mean-z") {
            throw std::invalid_argument(
                "ising observables: none, mean-x, mean-y, mean-z, corr-xx");
        }
        c = full;
    } else {
        throw std::invalid_argument("--experiment must be magfield or ising");
    }
    const std::string text = qasm::emit(c, opt.measure_all);
    if (opt.qasm_path.empty())
        std::cout << text;
    else
        write_text_file(opt.qasm_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinsim: spin-s registers on qubits, measurement protocols, and the "
                 "field/Ising experiments"};
    app.require_subcommand(1);

    SweepOptions magfield_opt, ising_opt;
    auto* magfield = app.add_subcommand(
        "magfield", "Sweep a spin-1 in a transverse magnetic field over omega*t");
    magfield->add_option("--initial", magfield_opt.initial, "Initial state: m+1 (default) or m0");
    add_sweep_flags(magfield, magfield_opt);

    auto* ising = app.add_subcommand(
        "ising", "Sweep the spin-1 x spin-1/2 Ising evolution over J*t");
    ising->add_option("--initial", ising_opt.initial, "Initial state (x-polarized)");
    add_sweep_flags(ising, ising_opt);

    int max_twice_s = 6;
    auto* algebra = app.add_subcommand("algebra-check",
                                       "Verify the spin-algebra identities with dense operators");
    algebra->add_option("--max-twice-s", max_twice_s, "Check every s with 2s up to this bound")
        ->check(CLI::Range(1, 12));

    ExportOptions export_opt;
    auto* export_qasm =
        app.add_subcommand("export-qasm", "Emit an experiment circuit as OpenQASM 2.0");
    export_qasm->add_option("--experiment", export_opt.experiment, "magfield or ising")
        ->required();
    export_qasm->add_option("--param", export_opt.param, "omega*t or J*t in radians")->required();
    export_qasm->add_option("--initial", export_opt.initial, "magfield initial: m+1 or m0");
    export_qasm->add_option("--observable", export_opt.observable,
                            "Append the measurement rotation: none, mean-x, mean-y, mean-z, "
                            "corr-xx (ising)");
    export_qasm->add_flag("--measure-all", export_opt.measure_all,
                          "Append terminal measurements on every qubit");
    export_qasm->add_option("--qasm", export_opt.qasm_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(magfield)) {
            if (!magfield_opt.config_path.empty()) apply_config_file(magfield, magfield_opt);
            return run_sweep_command(magfield_opt, spinsim::Experiment::magfield);
        }
        if (app.got_subcommand(ising)) {
            if (!ising_opt.config_path.empty()) apply_config_file(ising, ising_opt);
            return run_sweep_command(ising_opt, spinsim::Experiment::ising);
        }
        if (app.got_subcommand(algebra)) return run_algebra_check(max_twice_s);
        if (app.got_subcommand(export_qasm)) return run_export_qasm(export_opt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
