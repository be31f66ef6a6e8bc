#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reroute/scenario.hpp"

namespace reroute {

/// Recorded routes through a network whose topology is not available: enough
/// to recompute driving times, not to solve.
struct PathFixture {
  struct Route {
    NodeId workshop;
    std::vector<LinkId> links;
    std::vector<NodeId> nodes;
  };

  std::map<LinkId, double> lengths_km;
  std::array<double, 3> speed_kmh{};
  std::map<NodeId, WorkshopParams> workshops;
  std::array<Route, 3> routes;

  NodeId workshop() const { return routes[0].workshop; }
  double link_time_min(RouteKind route, LinkId link) const;
};

struct PathRecomputation {
  NodeId workshop;
  WorkshopParams params;
  std::array<double, 3> route_km{};
  std::array<double, 3> route_min{};
  double total_min = 0.0;
};

PathFixture parse_path_fixture(std::string_view text, std::string_view source = "<text>");

/// Driving time of each recorded route plus the chosen workshop's fixed times.
PathRecomputation recompute(const PathFixture& fixture);

enum class FixtureKind { Scenario, Paths };

/// base_highway, modified_highway, urban_paths.
const std::vector<std::string>& fixture_names();

/// Throws UnknownFixture.
FixtureKind fixture_kind(std::string_view name);
std::string_view fixture_text(std::string_view name);
/// File name of the shipped copy, e.g. "base_highway.scn".
std::string fixture_file_name(std::string_view name);

/// Throws UnknownFixture, or NotSolvable for a path fixture.
Scenario builtin_scenario(std::string_view name);
/// Throws UnknownFixture, or NotSolvable when `name` is a full scenario.
PathFixture builtin_path_fixture(std::string_view name);

std::variant<Scenario, PathFixture> builtin_fixture(std::string_view name);

}  // namespace reroute
