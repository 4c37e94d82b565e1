#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qmask::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kIoError = 2, kNotConverged = 3, kVerificationFailed = 4 };

struct ScanOptions {
  std::string case_name = "commuting";
  int p_steps = 101;
  std::optional<double> theta;
  std::optional<int> theta_steps;
  std::string out = "-";
  std::string format = "csv";
};

struct FindMaskerOptions {
  std::string case_name = "commuting";
  double theta = 0.7853981633974483;
  std::uint64_t seed = 7;
  int restarts = 64;
  int max_iterations = 2000;
  int threads = 1;
  std::string out = "-";
};

/// `out` receives data written to "-"; `err` receives diagnostics.
int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);
int cmd_find_masker(const FindMaskerOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err, bool color);

}  // namespace qmask::cli
