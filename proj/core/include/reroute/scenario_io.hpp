#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reroute/scenario.hpp"

namespace reroute {

/// Raw contents of a scenario file before cross-record validation.
///
/// The text format is line oriented. `#` starts a comment, blank lines are
/// ignored, `[section]` headers switch the record type and every record is a
/// comma-separated list of fields:
///
///   [nodes]      id, role                 role: workshop|warehouse|customer|interchange
///   [links]      id, tail, head, length_km, direction
///                                         direction: two-way|forward|reverse
///   [breakdown]  link, first_km, second_km, first_direction, second_direction
///   [workshops]  node, schedule_min, maintenance_min
///   [speeds]     route, link, km_per_h    link may be `*` for the route default
///
/// The breakdown site becomes node N+1 and its two half-links L+1 and L+2, so
/// speed overrides may name those ids.
struct ScenarioDocument {
  std::vector<NodeSpec> nodes;
  std::vector<Link> links;
  std::optional<BreakdownSplit> breakdown;
  std::map<NodeId, WorkshopParams> workshops;
  SpeedTable speeds;
  std::vector<Issue> issues;  // syntax problems, with line context
};

ScenarioDocument parse_document(std::string_view text, std::string_view source = "<text>");

/// Every syntax and consistency problem in the document.
std::vector<Issue> diagnose(const ScenarioDocument& doc);

/// Throws Error carrying the first problem diagnose() would report.
Scenario to_scenario(const ScenarioDocument& doc);

Scenario parse_scenario(std::string_view text, std::string_view source = "<text>");
Scenario load_scenario(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

/// Canonical text form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

/// Summary printed by `validate`.
struct ValidationReport {
  std::vector<Issue> issues;
  std::size_t num_nodes = 0;
  std::size_t num_links = 0;
  std::size_t num_directed_pairs = 0;

  bool ok() const { return issues.empty(); }
};

ValidationReport validate_scenario_text(std::string_view text, std::string_view source = "<text>");

}  // namespace reroute
