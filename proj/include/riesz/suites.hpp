#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "riesz/geometry.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// Suite selection plus optional sweep overrides; an empty sweep means the
/// suite default.
struct SuiteConfig {
  std::string suite;
  std::optional<ManifoldId> manifold;  // restrict mixed suites to one manifold
  std::vector<int> n, k, K;
  std::vector<double> p, q, r, omega;  // p, q use +inf for infinity
  std::uint64_t seed = 0x5EED;
  std::string output_dir = "verify-out";

  static SuiteConfig from_json(const nlohmann::ordered_json& j);
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// All reports of the suite, in a fixed order. Throws on an unknown suite.
std::vector<CheckReport> run_checks(const SuiteConfig& config);

/// 0 iff every asserted report passed.
int exit_status(const std::vector<CheckReport>& reports);

/// Runs the suite and writes report.jsonl, report.csv, config.json and one
/// <check_name>.svg per family into output_dir (each file written to a
/// temporary name and renamed). Progress goes to `log`. Returns exit_status.
int run_suite(const SuiteConfig& config, std::ostream& log);

/// Write `content` to `path` through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace riesz
