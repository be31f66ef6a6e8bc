#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <reroute/fixtures.hpp>
#include <reroute/solution.hpp>
#include <reroute/two_stage.hpp>

#include "json.hpp"

namespace reroute::cli {

/// Minutes with two decimals, e.g. "522.75".
std::string format_minutes(double minutes);

/// What `solve` prints for one method.
struct SolveReport {
  Solution solution;
  SolveStats stats;
  std::vector<WorkshopEvaluation> evaluations;  // two-stage only
};

void print_table(std::ostream& os, const SolveReport& report);
/// Stable schema; wall time is left out so output is reproducible.
nlohmann::ordered_json to_json(const SolveReport& report);

void print_table(std::ostream& os, const PathRecomputation& r, const PathFixture& fx);
nlohmann::ordered_json to_json(const PathRecomputation& r, const PathFixture& fx);

}  // namespace reroute::cli
