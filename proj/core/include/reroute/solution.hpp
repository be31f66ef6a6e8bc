#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reroute/scenario.hpp"

namespace reroute {

/// One driven leg, in travel order. `nodes` has one more entry than `links`.
struct RoutePath {
  RouteKind route = RouteKind::TowOut;
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;
  double driving_min = 0.0;
};

/// Chosen workshop and the three legs. total_min = schedule + maintenance + driving.
struct Solution {
  NodeId workshop;
  WorkshopParams params;
  std::array<RoutePath, 3> routes;
  double total_min = 0.0;

  double driving_min() const;
  const RoutePath& route(RouteKind k) const { return routes[route_index(k)]; }
};

struct SolveStats {
  std::string method;
  std::uint64_t search_nodes = 0;  // branch-and-bound nodes visited
  std::uint64_t branches = 0;      // value assignments tried while branching
  std::uint64_t heap_pops = 0;     // Dijkstra priority-queue pops
  double wall_ms = 0.0;
};

struct MethodResult {
  Solution solution;
  SolveStats stats;
};

/// Driving minutes of `links` on `route`, summed in order.
double path_time_min(const Scenario& scenario, RouteKind route, std::span<const LinkId> links);

/// Assembles a Solution, recomputing every time from the scenario.
Solution make_solution(const Scenario& scenario, NodeId workshop, std::array<RoutePath, 3> routes);

}  // namespace reroute
