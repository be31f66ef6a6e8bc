#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "reroute/scenario.hpp"
#include "reroute/solution.hpp"

namespace reroute {

struct RouteEdge {
  NodeId to;
  LinkId link;
  double weight_min = 0.0;
};

/// Directed adjacency for one route, weights in driving minutes. Out-edges of
/// each node are kept sorted by (to, link).
class RouteGraph {
 public:
  explicit RouteGraph(std::size_t num_nodes) : out_(num_nodes) {}

  /// Edges of the scenario's directed pair view, weighted for `route`. The
  /// half-link a route may not use at the breakdown site is left out.
  static RouteGraph for_route(const Scenario& scenario, RouteKind route);

  void add_edge(NodeId from, NodeId to, LinkId link, double weight_min);

  std::size_t num_nodes() const { return out_.size(); }
  std::size_t num_edges() const;
  bool has_node(NodeId id) const { return id.valid() && id.index() < out_.size(); }
  const std::vector<RouteEdge>& out_edges(NodeId from) const { return out_.at(from.index()); }

 private:
  std::vector<std::vector<RouteEdge>> out_;
};

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct ShortestPathResult {
  double minutes = kUnreachable;
  std::vector<NodeId> nodes;  // source first; just the source when source == target
  std::vector<LinkId> links;

  bool reachable() const { return minutes != kUnreachable; }
};

struct ShortestPathTree {
  struct Predecessor {
    NodeId node;
    LinkId link;
  };

  NodeId source;
  std::vector<double> distance;  // kUnreachable where not reached
  std::vector<std::optional<Predecessor>> predecessor;
  std::vector<bool> settled;
  std::uint64_t heap_pops = 0;

  /// Only meaningful for settled targets when the search stopped early.
  ShortestPathResult path_to(NodeId target) const;
};

/// Binary-heap Dijkstra with lazy deletion. Equal keys pop in node-id order;
/// an equal-length relaxation from a lower-id predecessor replaces the stored
/// one. Stops as soon as `target` is settled, if given. Throws UnknownSource.
ShortestPathTree dijkstra(const RouteGraph& graph, NodeId source,
                          std::optional<NodeId> target = std::nullopt);

struct WorkshopEvaluation {
  NodeId workshop;
  WorkshopParams params;
  std::array<ShortestPathResult, 3> routes;
  double total_min = 0.0;
  std::uint64_t heap_pops = 0;
};

/// Shortest tow-out, tow-back and delivery legs for one workshop plus its
/// fixed times. Throws Unreachable naming the first leg with no path.
WorkshopEvaluation evaluate_workshop(const Scenario& scenario, NodeId workshop);

struct TwoStageResult {
  Solution solution;
  std::vector<WorkshopEvaluation> evaluations;  // reachable workshops, by id
  SolveStats stats;
};

/// Evaluates every workshop and keeps the smallest total; ties go to the
/// lowest workshop id. Throws AllUnreachable.
TwoStageResult select_workshop(const Scenario& scenario);

MethodResult solve_two_stage(const Scenario& scenario);

/// Shortest driving minutes per (workshop, route), kUnreachable where no path
/// exists. Usable as MipOptions::route_lower_bounds.
std::map<NodeId, std::array<double, 3>> shortest_route_bounds(const Scenario& scenario);

}  // namespace reroute
