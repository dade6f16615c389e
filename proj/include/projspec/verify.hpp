#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace projspec {

struct CheckResult {
  std::string name;
  /// Worst residual, mismatch count or failure fraction, depending on the check.
  double measured = 0;
  double tolerance = 0;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1729;
  /// Random points per sweep.
  std::size_t points = 1000;
  unsigned threads = 0;
};

/// The invariant suite run by `verify`: semiconjugacy, Julia set vs
/// spectrum, indeterminacy, closed-form iteration, limit function, the sine
/// product, Koopman tau-values, joint-spectrum inclusions, hyperplane
/// verdicts, H0 containment and the GL_3 / free group constants.
/// Deterministic for fixed options.
std::vector<CheckResult> run_invariant_suite(const SuiteOptions& opts);

/// CSV with header check,measured,tolerance,pass,detail.
std::string format_suite_csv(const std::vector<CheckResult>& results);

}  // namespace projspec
