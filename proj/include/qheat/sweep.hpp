// sweep.hpp: Parameter sweeps, figure presets, CSV output and point reports
// behind the qheat command-line tool.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qheat/kernel.hpp"
#include "qheat/steady.hpp"
#include "qheat/thermo.hpp"

namespace qheat::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Model { Single, Coupled };
std::string_view to_string(Model m) noexcept;
Model parse_model(std::string_view name);

// Physical parameters of one point. `g`-style uniform densities only; the
// library API takes general spectral densities.
struct PointParams {
    double w0{1.0};
    double w1{1.0};
    double w2{2.0};
    double lambda{0.5};
    double ga{1.0};
    double gb{1.0};
    double ta{1.0};
    double tb{1.0};
};

struct SweepConfig {
    Model model{Model::Coupled};
    KernelMode mode{KernelMode::Lindblad};
    PointParams fixed;
    // One of w0 (single), w1, w2, lambda (coupled), g, ga, gb, ta, tb, or t, the
    // mean temperature, setting ta = t + bias and tb = t − bias.
    std::string var{"t"};
    double bias{0.0};
    double start{0.0};
    double stop{1.0};
    int count{2};
    bool header{true};
    unsigned threads{0};  // 0: hardware concurrency
};

// Throws ConfigError when count < 2, start ≥ stop, or var is not a parameter of the model.
void validate(const SweepConfig& cfg);

// Inclusive linear grid start + (stop − start)·i/(count − 1).
std::vector<double> sweep_grid(const SweepConfig& cfg);

// Applies the swept value to a copy of the fixed parameters.
PointParams point_at(const SweepConfig& cfg, double value);

struct PointResult {
    Eigen::VectorXd populations;
    std::complex<double> coherence;  // ρ₁₂ (single) or ρ₂₃ (coupled), energy order
    double q_a{0.0};
    double q_b{0.0};
    double conservation_residual{0.0};
    double solver_residual{0.0};
    SecondLaw second_law{SecondLaw::NotApplicable};
    PositivityReport positivity;
};

// Largest |q_A + q_B| accepted for a data row.
inline constexpr double kRowConservationTol = 1e-8;

// Runs the generic pipeline. Throws on invalid parameters and numeric failures,
// including a conservation residual above kRowConservationTol.
PointResult compute_point(Model model, KernelMode mode, const PointParams& p);

struct SweepRow {
    double value{0.0};
    std::optional<PointResult> result;  // empty: error row
    std::string error;
};

// One row per grid point, in grid order; points are computed concurrently.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

std::vector<std::string> csv_columns(const SweepConfig& cfg);
// `#` comment line (tool version and config echo, omitted when !cfg.header),
// the column row, then one line per row with 12 significant digits.
void write_csv(std::ostream& out, const SweepConfig& cfg, const std::vector<SweepRow>& rows);

// fig3: coupled Lindblad, T_A = T_B = T over [0.05, 8], 161 points.
// fig4: coupled Lindblad, T_B = 1, T_A over [0.5, 1.5], 101 points.
// fig5: coupled Redfield, ΔT = 5, mean T over [5.02, 8], 161 points.
// ω1 = 1, ω2 = 2, λ = 0.5, g = 1 throughout.
SweepConfig preset(std::string_view name);

// Human-readable multi-line report of one point. Currents with magnitude below
// kReportCurrentFloor print as 0; CSV output keeps raw values.
inline constexpr double kReportCurrentFloor = 1e-13;
std::string format_point_report(Model model, KernelMode mode, const PointParams& p,
                                const PointResult& r);

// True when the state has a population or eigenvalue below −tol.
bool violates_positivity(const PointResult& r, double tol = 1e-10);

} // namespace qheat::cli
