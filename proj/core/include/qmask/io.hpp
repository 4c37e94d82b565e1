#pragma once

// Plot-ready CSV and JSON renderings of scans and optimizer results.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qmask/optimizer.hpp"
#include "qmask/scan.hpp"

namespace qmask {

inline constexpr std::string_view kToolName = "qmask";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kScanCsvHeader = "p,theta,s_global,s_local,delta_s,concurrence,eof,negativity,residual";

/// Ordered key/value pairs rendered as `# key=value` lines (CSV) or a
/// "metadata" object (JSON).
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// 12 significant digits, as printf("%.12g").
std::string format_real(double x);

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records, const Metadata& metadata);
void write_scan_json(std::ostream& out, const std::vector<ScanRecord>& records, const Metadata& metadata);

/// Parses a file written by write_scan_csv. `#` lines are skipped; throws
/// qmask::Error on a missing/mismatched header or malformed row.
std::vector<ScanRecord> read_scan_csv(std::istream& in);

/// JSON document with the OptimizationResult fields under their own names,
/// plus the config and caller-supplied metadata.
std::string optimization_result_json(const OptimizationResult& result, const OptimizerConfig& config,
                                     const Metadata& metadata);

}  // namespace qmask
