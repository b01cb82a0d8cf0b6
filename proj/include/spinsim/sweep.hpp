// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinsim/models.hpp"
#include "spinsim/noise.hpp"
#include "spinsim/protocols.hpp"

namespace spinsim {

enum class Experiment { magfield, ising };
enum class InitialState { m_plus1, m_zero, x_polarized };

/// One parameter sweep over the dimensionless evolution parameter
/// (omega*t or J*t), gridded as linspace(0, max_param, steps).
struct SweepConfig {
    Experiment experiment = Experiment::magfield;
    InitialState initial = InitialState::m_plus1;
    int steps = 41;
    double max_param = 6.283185307179586476925286766559;  // 2 pi
    bool exact = false;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 7;
    std::optional<DeviceParams> noise;

    void validate() const;  // throws std::invalid_argument with a message
    double grid_point(int i) const;
};

/// Estimates and references at one grid point. Fields that do not apply to
/// the experiment (corr_xx for magfield, analytic probabilities/means for
/// ising) are left value-0 and are not exported.
struct SweepRow {
    double param = 0.0;
    std::array<Estimate, 3> prob_m{};   // |C_+1|^2, |C_0|^2, |C_-1|^2
    std::array<Estimate, 3> mean{};     // <S^x>, <S^y>, <S^z>
    Estimate mean_magnitude{};
    Estimate corr_xx{};                 // ising only
    std::array<double, 3> analytic_prob{};
    std::array<double, 3> analytic_mean{};
    double analytic_magnitude = 0.0;
    double analytic_corr = 0.0;         // ising only
    double leakage = 0.0;
};

/// Runs every grid point (points execute in parallel; each draws its seeds
/// by stream-splitting the sweep seed with the point index, so the result is
/// independent of scheduling). Deterministic given (config, seed).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// CSV with a header row, one data row per grid point, 12 significant
/// digits, '.' decimal point, LF endings. Byte-identical for identical rows.
void export_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg, std::ostream& out);
void export_csv(const std::vector<SweepRow>& rows, const SweepConfig& cfg,
                const std::string& path);
std::vector<std::string> csv_columns(const SweepConfig& cfg);

/// Residuals of the spin-algebra identities for one spin value. All must stay
/// below the 1e-12 tolerance.
struct AlgebraResiduals {
    int twice_s = 0;
    double commutator = 0.0;      // max ||[S^a,S^b] - i eps_abc S^c||_max
    double casimir = 0.0;         // max_m ||(S.S - s(s+1)) |s,m>||
    double sz_eigen = 0.0;        // max_m ||(S^z - m) |s,m>||
    double orthonormality = 0.0;  // max |<s,m|s,m'> - delta_mm'|
    double closure = 0.0;         // max residual of S^a|s,m> outside the Dicke span
    double max_residual() const;
};

struct AlgebraReport {
    std::vector<AlgebraResiduals> per_spin;
    double tolerance = 1e-12;
    bool all_within_tolerance() const;
};

/// Verifies the defining identities for every s with 2s = 1 .. max_twice_s
/// using dense operators (max_twice_s <= 12).
AlgebraReport algebra_check(int max_twice_s);

}  // namespace spinsim
