#include "qmask/scan.hpp"

#include "qmask/entanglement.hpp"
#include "qmask/masking.hpp"

namespace qmask {

std::string_view to_string(ScanCase c) { return c == ScanCase::commuting ? "commuting" : "noncommuting"; }

std::optional<ScanCase> parse_scan_case(std::string_view name) {
  if (name == "commuting") return ScanCase::commuting;
  if (name == "noncommuting") return ScanCase::noncommuting;
  return std::nullopt;
}

double theta_upper_bound(ScanCase c) { return c == ScanCase::commuting ? kPi : kPi / 2.0; }

ScanRecord scan_point(ScanCase c, double p, double theta) {
  const PurePair pair =
      c == ScanCase::commuting ? canonical_orthogonal_pair(theta) : canonical_nonorthogonal_pair(theta);
  const DensityMatrix rho =
      mix(DensityMatrix::from_pure(pair.first), DensityMatrix::from_pure(pair.second), p);
  const EntanglementReport report = analyze(rho);
  ScanRecord r;
  r.p = p;
  r.theta = theta;
  r.s_global = report.entropy_global;
  r.s_local = report.entropy_local_1;
  r.delta_s = report.delta_s;
  r.concurrence = report.concurrence;
  r.eof = report.eof;
  r.negativity = report.negativity;
  r.residual = masking_residual(pair.first, pair.second);
  return r;
}

std::vector<ScanRecord> run_scan(ScanCase c, std::span<const double> p_values, std::span<const double> thetas) {
  std::vector<ScanRecord> out;
  out.reserve(p_values.size() * thetas.size());
  for (double theta : thetas)
    for (double p : p_values) out.push_back(scan_point(c, p, theta));
  return out;
}

}  // namespace qmask
