#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qmask/io.hpp"

int main(int argc, char** argv) {
  using namespace qmask::cli;

  CLI::App app{"qmask: masking of two-qubit mixtures - scans, masker search, verification"};
  app.set_version_flag("--version", std::string(qmask::kToolVersion));
  app.require_subcommand(1);

  ScanOptions scan;
  double scan_theta = 0.0;
  int scan_theta_steps = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Grid scan of entropies and entanglement over (p, theta)");
  scan_cmd->add_option("--case", scan.case_name, "commuting | noncommuting")->capture_default_str();
  scan_cmd->add_option("--p-steps", scan.p_steps, "Points on the p grid over [0, 1]")->capture_default_str();
  auto* theta_opt = scan_cmd->add_option("--theta", scan_theta, "Single theta in radians");
  auto* theta_steps_opt =
      scan_cmd->add_option("--theta-steps", scan_theta_steps, "Points on the theta grid over the case's range");
  scan_cmd->add_option("--out", scan.out, "Output path, '-' for stdout")->capture_default_str();
  scan_cmd->add_option("--format", scan.format, "csv | json")->capture_default_str();

  FindMaskerOptions find;
  auto* find_cmd = app.add_subcommand("find-masker", "Search for a minimum-entanglement unitary masker");
  find_cmd->add_option("--case", find.case_name, "commuting | noncommuting")->capture_default_str();
  find_cmd->add_option("--theta", find.theta, "Second input's polar angle in radians (noncommuting)")
      ->capture_default_str();
  find_cmd->add_option("--seed", find.seed, "Random seed")->capture_default_str();
  find_cmd->add_option("--restarts", find.restarts, "Multi-start count")->capture_default_str();
  find_cmd->add_option("--max-iterations", find.max_iterations, "Iterations per local search")
      ->capture_default_str();
  find_cmd->add_option("--threads", find.threads, "Worker threads, 0 = all cores")->capture_default_str();
  find_cmd->add_option("--out", find.out, "Output path, '-' for stdout")->capture_default_str();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run a numerical verification suite");
  verify_cmd->add_option("--suite", suite, "lemma1 | lemma2 | lemma3 | thm1 | thm2 | appendix | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (*scan_cmd) {
    if (*theta_opt) scan.theta = scan_theta;
    if (*theta_steps_opt) scan.theta_steps = scan_theta_steps;
    return cmd_scan(scan, std::cout, std::cerr);
  }
  if (*find_cmd) return cmd_find_masker(find, std::cout, std::cerr);
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return cmd_verify(suite, std::cout, std::cerr, color);
}
