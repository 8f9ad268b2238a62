#pragma once

#include <string>

#include "adsharvest/config.hpp"

// Grid evaluation of a configured scenario over 0, 1 or 2 swept parameters,
// emitted as CSV.  Rows are computed independently and formatted per row,
// so the output is byte-identical for any worker count.

namespace adsh {

struct SweepResult {
  long rows = 0;
  long flagged = 0;  // rows whose flags column is not "ok"
};

// Full CSV text: fingerprint comment lines, a header row, then one line per
// grid point (axis1 slowest).
std::string sweep_csv(const SweepConfig& cfg, int workers = 1);

// Writes sweep_csv to `path_override` if non-empty, else cfg.output_path.
// Throws std::runtime_error when neither names a writable file.
SweepResult sweep_to_file(const SweepConfig& cfg,
                          const std::string& path_override, int workers = 1);

}  // namespace adsh
