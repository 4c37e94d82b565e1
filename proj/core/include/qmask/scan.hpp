#pragma once

// (p, theta) grid scans over the masked mixture families.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qmask {

/// commuting: mixtures of the canonical orthogonal pair (theta in [0, pi]).
/// noncommuting: mixtures of the canonical non-orthogonal pair (theta in [0, pi/2]).
enum class ScanCase { commuting, noncommuting };

std::string_view to_string(ScanCase c);
std::optional<ScanCase> parse_scan_case(std::string_view name);

/// Upper end of the admissible theta range for the case.
double theta_upper_bound(ScanCase c);

struct ScanRecord {
  double p = 0.0;
  double theta = 0.0;
  double s_global = 0.0;
  double s_local = 0.0;  ///< S(Tr_1 rho)
  double delta_s = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double negativity = 0.0;
  double residual = 0.0;  ///< masking residual of the two pure masked states
};

ScanRecord scan_point(ScanCase c, double p, double theta);

/// Theta-major: every p for thetas[0], then every p for thetas[1], ...
std::vector<ScanRecord> run_scan(ScanCase c, std::span<const double> p_values, std::span<const double> thetas);

}  // namespace qmask
