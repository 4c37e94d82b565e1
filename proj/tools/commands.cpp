#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "qmask/errors.hpp"
#include "qmask/io.hpp"
#include "qmask/optimizer.hpp"
#include "qmask/scan.hpp"
#include "qmask/verify.hpp"

namespace qmask::cli {

namespace {

// Writes through `produce` either to `out` ("-") or to a file.
int emit(const std::string& path, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& produce) {
  if (path == "-") {
    produce(out);
    out.flush();
    return out ? kSuccess : kIoError;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kIoError;
  }
  produce(file);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return kIoError;
  }
  return kSuccess;
}

}  // namespace

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  const auto scan_case = parse_scan_case(opts.case_name);
  if (!scan_case) {
    err << "error: --case must be 'commuting' or 'noncommuting'\n";
    return kUsageError;
  }
  if (opts.p_steps < 2) {
    err << "error: --p-steps must be at least 2\n";
    return kUsageError;
  }
  if (opts.format != "csv" && opts.format != "json") {
    err << "error: --format must be 'csv' or 'json'\n";
    return kUsageError;
  }
  if (opts.theta && opts.theta_steps) {
    err << "error: give either --theta or --theta-steps, not both\n";
    return kUsageError;
  }
  const double upper = theta_upper_bound(*scan_case);
  std::vector<double> thetas;
  if (opts.theta_steps) {
    if (*opts.theta_steps < 2) {
      err << "error: --theta-steps must be at least 2\n";
      return kUsageError;
    }
    thetas = uniform_grid(0.0, upper, static_cast<std::size_t>(*opts.theta_steps));
  } else {
    const double theta = opts.theta.value_or(0.0);
    if (!std::isfinite(theta) || theta < 0.0 || theta > upper + kRangeSlack) {
      err << "error: --theta must lie in [0, " << format_real(upper) << "] for case " << opts.case_name << "\n";
      return kUsageError;
    }
    thetas = {theta};
  }
  const auto ps = uniform_grid(0.0, 1.0, static_cast<std::size_t>(opts.p_steps));

  std::vector<ScanRecord> records;
  try {
    records = run_scan(*scan_case, ps, thetas);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  Metadata meta{{"command", "scan"}, {"case", opts.case_name}, {"p_steps", std::to_string(opts.p_steps)}};
  if (opts.theta_steps) {
    meta.emplace_back("theta_steps", std::to_string(*opts.theta_steps));
  } else {
    meta.emplace_back("theta", format_real(thetas.front()));
  }
  return emit(opts.out, out, err, [&](std::ostream& os) {
    if (opts.format == "csv") {
      write_scan_csv(os, records, meta);
    } else {
      write_scan_json(os, records, meta);
    }
  });
}

int cmd_find_masker(const FindMaskerOptions& opts, std::ostream& out, std::ostream& err) {
  const auto scan_case = parse_scan_case(opts.case_name);
  if (!scan_case) {
    err << "error: --case must be 'commuting' or 'noncommuting'\n";
    return kUsageError;
  }
  if (opts.restarts <= 0 || opts.max_iterations <= 0 || opts.threads < 0) {
    err << "error: --restarts and --max-iterations must be positive, --threads non-negative\n";
    return kUsageError;
  }
  OptimizerConfig config;
  config.seed = opts.seed;
  config.restarts = static_cast<std::size_t>(opts.restarts);
  config.max_iterations = static_cast<std::size_t>(opts.max_iterations);
  config.threads = static_cast<std::size_t>(opts.threads);

  const QubitState input1 = QubitState::zero();
  std::optional<QubitState> input2;
  Metadata meta{{"command", "find-masker"}, {"case", opts.case_name}};
  if (*scan_case == ScanCase::commuting) {
    input2 = QubitState::one();
    meta.emplace_back("inputs", "|0>, |1>");
  } else {
    if (!std::isfinite(opts.theta) || opts.theta <= 0.0 || opts.theta > kPi + kRangeSlack) {
      err << "error: --theta must lie in (0, pi] for the noncommuting case\n";
      return kUsageError;
    }
    input2 = bloch_to_pure({std::min(opts.theta, kPi), 0.0});
    meta.emplace_back("theta", format_real(opts.theta));
    meta.emplace_back("inputs", "|0>, cos(theta/2)|0> + sin(theta/2)|1>");
  }

  OptimizationResult result;
  try {
    result = min_entanglement_masker(input1, *input2, config);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const std::string doc = optimization_result_json(result, config, meta);
  const int io = emit(opts.out, out, err, [&](std::ostream& os) { os << doc; });
  if (io != kSuccess) return io;
  if (!result.converged) {
    err << "warning: no restart reached residual <= " << format_real(config.masking_tolerance)
        << " (best " << format_real(result.residual) << ")\n";
    return kNotConverged;
  }
  return kSuccess;
}

int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err, bool color) {
  const auto report = run_suite(suite);
  if (!report) {
    err << "error: unknown suite '" << suite << "' (expected one of:";
    for (const auto& n : suite_names()) err << ' ' << n;
    err << " all)\n";
    return kUsageError;
  }
  print_report(out, *report, color);
  return report->passed() ? kSuccess : kVerificationFailed;
}

}  // namespace qmask::cli
