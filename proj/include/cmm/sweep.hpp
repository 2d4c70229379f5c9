#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmm/coherence.hpp"
#include "cmm/linear_model.hpp"
#include "cmm/steady_state.hpp"
#include "cmm/units.hpp"

namespace cmm {

/// Outcome of the full pipeline at one parameter point. Coherences are
/// present only when the linearized dynamics is stable.
struct PointRecord {
    PhysicalParams params;
    bool stable = false;
    double spectral_abscissa = 0.0;
    SteadyState steady;
    std::optional<CoherenceReport> coherence;
    std::string status;  // "ok", "unstable" or "error: <reason>" inside sweeps
    std::size_t grid_i = 0;
    std::size_t grid_j = 0;
};

/// Evaluations at +|Delta_B| and -|Delta_B| with all else equal.
struct PairRecord {
    PointRecord plus;
    PointRecord minus;
    std::optional<double> I_a, I_m, I_b, I_tot;
    std::size_t grid_i = 0;
    std::size_t grid_j = 0;
};

enum class AxisScale { linear, log };
enum class OutputFormat { csv, jsonl };

/// Pseudo-parameter name that sets Delta_B to +value (pair sweeps mirror it).
inline constexpr std::string_view kDeltaBMagnitude = "deltaB_mag";

struct SweepAxis {
    std::string parameter;
    double min = 0.0;
    double max = 0.0;
    std::size_t points = 2;
    AxisScale scale = AxisScale::linear;

    /// Grid values; endpoints are reproduced exactly.
    std::vector<double> values() const;
};

struct SweepSpec {
    std::string name;
    PhysicalParams base;
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    bool pair_barnett = false;
    OutputFormat format = OutputFormat::csv;

    /// Throws ConfigError on bad axes (fewer than 2 points, min >= max,
    /// unknown parameter, non-positive bound on a log axis).
    void validate() const;
};

struct SweepResult {
    std::vector<PointRecord> points;  // filled when !pair_barnett
    std::vector<PairRecord> pairs;    // filled when pair_barnett
};

/// |C+ - C-| / (C+ + C-). Throws DomainError when the sum vanishes or an
/// input is negative.
double contrast_ratio(double c_plus, double c_minus);

/// Steady state, linearization, stability and (if stable) covariance and
/// coherence. Instability is recorded, not thrown.
PointRecord evaluate_point(const PhysicalParams& params);

PairRecord evaluate_pair(const PhysicalParams& params, double deltaB_magnitude);

/// Sets a registry parameter or kDeltaBMagnitude on a copy of params.
PhysicalParams with_parameter(PhysicalParams params, std::string_view name, double value);

/// Evaluates the full grid, row-major over (axis1, axis2), using up to
/// `threads` workers (0 picks hardware concurrency). Output order does not
/// depend on the schedule.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Reproduction presets. Most figures are a single sweep; the decay-rate
/// figure has one panel per scanned rate.
struct FigurePreset {
    std::string id;
    std::vector<SweepSpec> panels;
    std::vector<std::string> notes;  // artifact choices (ranges, grid sizes)
};

/// Known ids: fig2, fig3, fig4, fig5, fig6. Throws ConfigError otherwise.
FigurePreset figure_preset(std::string_view id);

std::vector<std::string> figure_preset_ids();

}  // namespace cmm
