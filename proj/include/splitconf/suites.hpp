#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitconf/report.hpp"

namespace splitconf {

struct RunConfig {
  double tolerance = 1e-12;
  std::uint64_t seed = 42;
  int samples = 1000;
};

/// Suite names in canonical order.
const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);

/// Randomized invariance of quadratic_form and the 6x6 metric, agreement of
/// the 2x2 and 4x4 actions, per-generator checks and the SO(3,1) projection.
Report group_suite(const RunConfig& config);

/// Runs one suite by name. Throws std::invalid_argument for unknown names.
Report run_suite(std::string_view name, const RunConfig& config);

/// Runs the named suites concurrently and returns their reports in
/// canonical order, each suite at most once.
std::vector<Report> run_suites(const std::vector<std::string>& names, const RunConfig& config);

}  // namespace splitconf
