#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mzv/config.hpp"

namespace mzv::verify {

using Json = nlohmann::ordered_json;

/// Parameter grid of one suite. Zero or empty fields mean "suite default"
/// until default_spec fills them in.
struct SuiteSpec {
  std::string name;
  int max_weight = 0;
  std::vector<double> xs;
  std::vector<double> ts;
  /// Check tolerance (not the evaluation tolerance, which is kept tighter).
  double tol = 0.0;
  long cutoff = 0;
  /// Series order used by the suite: y-order, Taylor order or m range.
  int order = 0;
};

struct Check {
  std::string id;
  Json inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  /// Set when the check failed with an exception or is a monotonicity test.
  std::string note;
};

struct CheckReport {
  std::string suite;
  std::string anchor;
  std::vector<Check> checks;
  double wall_seconds = 0.0;
  Json config;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Every suite name in canonical run order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// The identity a suite verifies, in words and formulas.
const std::string& suite_anchor(const std::string& name);

/// Defaults for the named suite; throws UsageError for unknown names.
SuiteSpec default_spec(const std::string& name);
/// Overlay the non-default fields of overrides onto the suite defaults.
SuiteSpec merge_spec(const std::string& name, const SuiteSpec& overrides);

/// Run one suite. Numeric failures inside a check are recorded as failed
/// checks; only an unknown suite name throws.
CheckReport run_suite(const SuiteSpec& spec, const EvalConfig& base = {});

/// One JSON object per check followed by a per-suite summary object.
std::string to_jsonl(const CheckReport& report);
/// Fixed-width table with one row per suite.
std::string summary_table(const std::vector<CheckReport>& reports);
/// Human lines for the failed checks of a report.
std::string failure_details(const CheckReport& report, std::size_t limit = 20);

}  // namespace mzv::verify
