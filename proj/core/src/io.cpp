#include "qmask/io.hpp"

#include <array>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qmask/errors.hpp"

namespace qmask {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kScanColumns = 9;

std::array<double, kScanColumns> columns(const ScanRecord& r) {
  return {r.p, r.theta, r.s_global, r.s_local, r.delta_s, r.concurrence, r.eof, r.negativity, r.residual};
}

json metadata_json(const Metadata& metadata) {
  json m = json::object();
  for (const auto& [k, v] : metadata) m[k] = v;
  return m;
}

}  // namespace

std::string format_real(double x) {
  // -0 would otherwise print as "-0"
  if (x == 0.0) x = 0.0;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", x);
  return buf.data();
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records, const Metadata& metadata) {
  out << "# " << kToolName << ' ' << kToolVersion << '\n';
  for (const auto& [k, v] : metadata) out << "# " << k << '=' << v << '\n';
  out << kScanCsvHeader << '\n';
  for (const auto& r : records) {
    const auto cols = columns(r);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << format_real(cols[i]);
    out << '\n';
  }
}

void write_scan_json(std::ostream& out, const std::vector<ScanRecord>& records, const Metadata& metadata) {
  json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["metadata"] = metadata_json(metadata);
  json rows = json::array();
  for (const auto& r : records) {
    rows.push_back({{"p", r.p},
                    {"theta", r.theta},
                    {"s_global", r.s_global},
                    {"s_local", r.s_local},
                    {"delta_s", r.delta_s},
                    {"concurrence", r.concurrence},
                    {"eof", r.eof},
                    {"negativity", r.negativity},
                    {"residual", r.residual}});
  }
  doc["records"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

std::vector<ScanRecord> read_scan_csv(std::istream& in) {
  std::vector<ScanRecord> records;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kScanCsvHeader) throw Error("read_scan_csv: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    std::array<double, kScanColumns> v{};
    std::istringstream row(line);
    std::string cell;
    std::size_t n = 0;
    while (std::getline(row, cell, ',')) {
      if (n == kScanColumns) throw Error("read_scan_csv: too many columns on line " + std::to_string(line_no));
      std::size_t used = 0;
      try {
        v[n] = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty()) {
        throw Error("read_scan_csv: bad number '" + cell + "' on line " + std::to_string(line_no));
      }
      ++n;
    }
    if (n != kScanColumns) throw Error("read_scan_csv: too few columns on line " + std::to_string(line_no));
    records.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
  }
  if (!header_seen) throw Error("read_scan_csv: missing header");
  return records;
}

std::string optimization_result_json(const OptimizationResult& result, const OptimizerConfig& config,
                                     const Metadata& metadata) {
  json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["metadata"] = metadata_json(metadata);
  const MaskerParams& mp = result.params;
  doc["params"] = {{"alpha_x", mp.alpha_x},
                   {"alpha_y", mp.alpha_y},
                   {"alpha_z", mp.alpha_z},
                   {"euler_a", mp.euler_a},
                   {"euler_b", mp.euler_b},
                   {"canonical_form", mp.canonical_form}};
  doc["residual"] = result.residual;
  json table = json::array();
  for (const auto& [p, eof] : result.eof_by_p) table.push_back({p, eof});
  doc["eof_by_p"] = std::move(table);
  doc["min_eof"] = result.min_eof;
  doc["argmin_p"] = result.argmin_p;
  doc["converged"] = result.converged;
  doc["restart_index"] = result.restart_index;
  doc["objective"] = result.objective;
  doc["config"] = {{"restarts", config.restarts},
                   {"max_iterations", config.max_iterations},
                   {"seed", config.seed},
                   {"masking_tolerance", config.masking_tolerance},
                   {"penalty_weight", config.penalty_weight},
                   {"simplex_scale", config.simplex_scale},
                   {"p_grid", config.p_grid},
                   {"local_search", "nelder-mead (1, 2, 0.5, 0.5)"},
                   {"euler_convention", "ZYZ"},
                   {"ancilla", "|0><0|"}};
  return doc.dump(2) + "\n";
}

}  // namespace qmask
