#pragma once

#include <string>
#include <vector>

#include "adsharvest/elements.hpp"
#include "adsharvest/scenario.hpp"

// Flat INI-style run configuration.  Sections [scenario], [sweep],
// [truncation], [output]; '#' starts a comment; unknown sections or keys
// are hard errors, never warnings.

namespace adsh {

struct AxisSpec {
  std::string name;  // gap | separation | curvature | delay
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct SweepConfig {
  PairKind kind = PairKind::geodesic;
  int eps = -1;
  double curvature = 1.0;
  double gap = 1.0;
  double sigma = 1.0;
  double separation = 1.0;
  double delay = 0.0;
  double coupling = 0.01;
  std::vector<AxisSpec> axes;  // 0, 1 or 2 swept parameters
  Truncation trunc;
  std::string output_path;
};

SweepConfig parse_config(const std::string& text);
SweepConfig parse_config_file(const std::string& path);

// Scenario for one grid point; `values` pairs with cfg.axes.
Scenario scenario_at(const SweepConfig& cfg, const std::vector<double>& values);

}  // namespace adsh
