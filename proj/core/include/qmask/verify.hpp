#pragma once

// Named numerical verification suites for the masking results. Each suite
// evaluates its claims on fixed grids and reports the worst case per check.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmask {

struct SuiteCheck {
  std::string description;
  bool passed = false;
  /// Worst-case measured value; NaN for purely boolean checks.
  double measured = 0.0;
  double tolerance = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool passed() const;
  /// Appends a check; `passed` is decided by the caller.
  void add(std::string description, bool passed, double measured, double tolerance);
  void add(std::string description, bool passed);
};

/// lemma1, lemma2, lemma3, thm1, thm2, appendix.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Returns nullopt for an unknown name.
std::optional<SuiteReport> run_suite(std::string_view name);

/// One line per check followed by a summary line. `color` adds ANSI colour.
void print_report(std::ostream& out, const SuiteReport& report, bool color);

/// Entropy of the orthogonal masked mixture written piecewise in p:
/// -m log2 m - (1 + |1-2p|)/2 log2((1 + |1-2p|)/2), m = min(p, 1-p).
double orthogonal_mixture_entropy(double p);

}  // namespace qmask
