#pragma once

#include <string>
#include <vector>

// Internal-consistency suite behind the `check` command: pinned reference
// values, cross-path agreement, algebraic identities, spectrum structure,
// truncation stability and density-matrix health.

namespace adsh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs every gate.  `regen` recomputes the independent-quadrature reference
// values and rewrites the pin file instead of comparing against it.
std::vector<CheckResult> run_checks(const std::string& pins_path, bool regen);

}  // namespace adsh
