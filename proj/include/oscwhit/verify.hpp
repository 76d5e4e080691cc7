#pragma once

// The ten end-to-end checks.  Each criterion runs a fixed parameter grid,
// records one line per sub-check and fails if any sub-check fails or the
// wall time exceeds its budget.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace oscwhit {

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double budget_seconds = 0.0;
  double seconds = 0.0;
  bool pass = false;
  std::vector<CheckLine> checks;
  nlohmann::json data = nlohmann::json::object();

  // "PASS  3  <title>  (1.23 s)"
  std::string summary_line() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  // smaller grids; the wall-time budget still applies
  bool quick = false;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

std::vector<double> logspace(double lo, double hi, int n);

// Measures the implied constants on the reference families of the
// criteria above, restricted to keys starting with prefix.  Upper-bound
// constants carry the factor kCalibrationSafety, lower-bound constants of
// the zeta sweeps are the fitted values, and the prime-count constant is
// divided by the factor.
constexpr double kCalibrationSafety = 1.5;
std::map<std::string, double> measure_constants(const std::string& prefix = "");

}  // namespace oscwhit
