#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "qmask/io.hpp"

using namespace qmask;
using namespace qmask::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::path(QMASK_TEST_TMPDIR) / name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scan writes csv with one bit local entropy") {
  ScanOptions o;
  o.p_steps = 101;
  o.theta = 0.3;
  std::ostringstream out, err;
  CHECK(cmd_scan(o, out, err) == kSuccess);
  std::istringstream in(out.str());
  const auto recs = read_scan_csv(in);
  REQUIRE(recs.size() == 101);
  for (const auto& r : recs) CHECK(r.s_local == 1.0);
}

TEST_CASE("scan over a theta grid") {
  ScanOptions o;
  o.case_name = "noncommuting";
  o.p_steps = 51;
  o.theta_steps = 51;
  std::ostringstream out, err;
  CHECK(cmd_scan(o, out, err) == kSuccess);
  std::istringstream in(out.str());
  const auto recs = read_scan_csv(in);
  REQUIRE(recs.size() == 51 * 51);
  for (const auto& r : recs) {
    CHECK(r.delta_s <= 1e-9);
    const bool on_line = std::abs(r.p - 0.5) < 1e-9 || std::abs(r.theta - kPi / 2) < 1e-9;  // csv keeps 12 digits
    if (!on_line) CHECK(r.delta_s < 0.0);
  }
}

TEST_CASE("scan json and file output") {
  ScanOptions o;
  o.p_steps = 3;
  o.format = "json";
  o.out = tmp("scan.json").string();
  std::ostringstream out, err;
  CHECK(cmd_scan(o, out, err) == kSuccess);
  CHECK(out.str().empty());
  const auto doc = nlohmann::json::parse(slurp(o.out));
  CHECK(doc["records"].size() == 3);
  CHECK(doc["metadata"]["command"] == "scan");

  // same command, same bytes
  const std::string first = slurp(o.out);
  CHECK(cmd_scan(o, out, err) == kSuccess);
  CHECK(slurp(o.out) == first);
}

TEST_CASE("scan usage errors") {
  std::ostringstream out, err;
  auto run = [&](auto mutate) {
    ScanOptions o;
    mutate(o);
    return cmd_scan(o, out, err);
  };
  CHECK(run([](ScanOptions& o) { o.p_steps = 1; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.case_name = "other"; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.format = "xml"; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.theta = 0.1; o.theta_steps = 4; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.theta_steps = 1; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.theta = 4.0; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.case_name = "noncommuting"; o.theta = 2.0; }) == kUsageError);
  CHECK(run([](ScanOptions& o) { o.out = "/nonexistent-dir/x.csv"; }) == kIoError);
  CHECK(err.str().find("cannot open") != std::string::npos);
}

TEST_CASE("find-masker writes a converged result") {
  FindMaskerOptions o;
  o.restarts = 4;
  o.out = tmp("masker.json").string();
  std::ostringstream out, err;
  CHECK(cmd_find_masker(o, out, err) == kSuccess);
  const auto doc = nlohmann::json::parse(slurp(o.out));
  CHECK(doc["converged"] == true);
  CHECK(doc["argmin_p"].get<double>() == 0.5);
  CHECK(doc["config"]["seed"] == 7);
  CHECK(doc["metadata"]["case"] == "commuting");

  const std::string first = slurp(o.out);
  CHECK(cmd_find_masker(o, out, err) == kSuccess);
  CHECK(slurp(o.out) == first);
}

TEST_CASE("find-masker exit codes") {
  std::ostringstream out, err;
  FindMaskerOptions o;
  o.restarts = 0;
  CHECK(cmd_find_masker(o, out, err) == kUsageError);
  o.restarts = 1;
  o.case_name = "noncommuting";
  o.theta = 0.0;  // identical inputs
  CHECK(cmd_find_masker(o, out, err) == kUsageError);
  o.theta = 0.5;
  o.out = "/nonexistent-dir/m.json";
  CHECK(cmd_find_masker(o, out, err) == kIoError);

  // a starved search still writes its best attempt and reports exit 3
  FindMaskerOptions starved;
  starved.restarts = 1;
  starved.max_iterations = 1;
  starved.seed = 3;
  std::ostringstream sout, serr;
  CHECK(cmd_find_masker(starved, sout, serr) == kNotConverged);
  const auto doc = nlohmann::json::parse(sout.str());
  CHECK(doc["converged"] == false);
  CHECK(serr.str().find("warning") != std::string::npos);
}

TEST_CASE("verify command") {
  std::ostringstream out, err;
  CHECK(cmd_verify("lemma1", out, err, false) == kSuccess);
  CHECK(out.str().find("\x1b[") == std::string::npos);
  std::ostringstream cout_;
  CHECK(cmd_verify("lemma1", cout_, err, true) == kSuccess);
  CHECK(cout_.str().find("\x1b[") != std::string::npos);
  CHECK(cmd_verify("bogus", out, err, false) == kUsageError);
  CHECK(err.str().find("unknown suite") != std::string::npos);
}

}  // TEST_SUITE
