#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace locstate::cli {

/// Executes a validated configuration and returns the paths written, one
/// artifact per requested time (or screen) value. Deterministic bytes for a
/// fixed config, independent of LOCSTATE_THREADS.
std::vector<std::string> run(const ExperimentConfig& config);

}  // namespace locstate::cli
