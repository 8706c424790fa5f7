#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "locstate/diffraction.hpp"
#include "locstate/types.hpp"

namespace locstate::cli {

/// Unwritable output path; mapped to exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string regime_name(diffraction::Regime regime);

/// Columns exactly `y,density`, 17-significant-digit floats, LF endings.
/// Golden files double as numerical regression tests, so bytes must be
/// stable across runs and thread counts.
void emit_csv(const SampledDensity& density, const std::string& path);

/// Fixed key order {fresnel_number, l2_distance, linf_distance, peak_ratio,
/// regime}.
void emit_json(const diffraction::ComparisonReport& report, const std::string& path);

/// Self-contained SVG line chart: solid observed polyline, optional dashed
/// reference polyline, axes labeled y and |Psi|^2, no external resources.
void emit_svg(const SampledDensity& observed, const SampledDensity* reference,
              const std::string& path);

/// Wide CSV of a trajectory fan: first column t, one column per launch point.
void emit_trajectories_csv(const diffraction::TrajectoryFan& fan, const std::string& path);

}  // namespace locstate::cli
