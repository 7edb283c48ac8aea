#pragma once

// Batch property checks driven by a JSON configuration, e.g.
//
//   {"seed": 0, "checks": [
//     {"property": "thm3", "n_max": 13},
//     {"property": "zig_le_chi", "max_vertices": 6}]}
//
// Each check reports instance and failure counts; the sweep passes iff
// every check does.

#include "minorforge/io.hpp"
#include "minorforge/limits.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minorforge {

struct CheckResult {
  std::string property;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct SweepReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  Json to_json() const;
};

/// Property names accepted in "checks".
const std::vector<std::string>& sweep_properties();

/// Runs the configured checks in order. Malformed configurations raise
/// InputError before anything runs.
SweepReport run_sweep(const Json& config, const Limits& limits = {});

}  // namespace minorforge
