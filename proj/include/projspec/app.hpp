#pragma once

#include <ostream>
#include <string>

#include "projspec/config.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  /// A tolerance was breached or a numerical routine failed.
  kExitNumerical = 2,
  /// Invalid input or I/O failure.
  kExitInvalid = 3,
};

/// Runs one job: writes its outputs and manifest.txt into job.output_dir,
/// prints a short report to `out` and diagnostics to `err`.
int run(const JobConfig& job, std::ostream& out, std::ostream& err);

/// The point rescaled so its last non-negligible coordinate is 1, e.g.
/// [-1:1:0]. Used for printed output only.
ProjPoint display_form(const ProjPoint& p);

}  // namespace projspec
