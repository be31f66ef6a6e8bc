#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <reroute/scenario.hpp>

namespace reroute::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInfeasible = 3,
  kDisagreement = 4,
};

/// Objectives further apart than this count as a disagreement.
inline constexpr double kAgreementTolerance = 1e-9;

inline bool objectives_agree(double a, double b) { return std::abs(a - b) <= kAgreementTolerance; }

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// errors to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchTiming {
  std::string method;
  std::vector<double> samples_ms;
  double median_ms = 0.0;
};

struct BenchResult {
  BenchTiming mip;
  BenchTiming two_stage;
  double ratio() const { return mip.median_ms / two_stage.median_ms; }
};

/// Median of `samples`; with one sample, that sample.
double median(std::vector<double> samples);

/// Times `repeats` end-to-end solves with each method.
BenchResult run_bench(const Scenario& scenario, int repeats);

}  // namespace reroute::cli
