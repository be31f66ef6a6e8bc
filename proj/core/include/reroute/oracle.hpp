#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "reroute/scenario.hpp"
#include "reroute/solution.hpp"
#include "reroute/two_stage.hpp"

// Exhaustive reference computations for cross-checking the solvers. They are
// exponential on purpose and refuse graphs above a node cap.
namespace reroute::oracle {

inline constexpr std::size_t kDefaultNodeCap = 14;

struct EnumeratedPath {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;
  double cost_min = 0.0;
};

struct PathEnumeration {
  std::vector<EnumeratedPath> paths;

  /// kUnreachable when there are no paths.
  double min_cost() const;
};

/// Route graph rebuilt straight from the link list, without going through
/// the network's directed pair view.
RouteGraph route_graph(const Scenario& scenario, RouteKind route);

/// Every simple path from source to target, in depth-first order over
/// out-edges. source == target yields one empty path. Throws CapExceeded when
/// the graph has more than `max_nodes` nodes.
PathEnumeration enumerate_simple_paths(const RouteGraph& graph, NodeId source, NodeId target,
                                       std::size_t max_nodes = kDefaultNodeCap);

/// Optimum by trying every workshop with every combination of simple paths
/// for the three routes. Throws CapExceeded, or AllUnreachable when no
/// workshop has a path for all three routes.
Solution brute_force_solution(const Scenario& scenario, std::size_t max_nodes = kDefaultNodeCap);

/// Variable values of the flow model in plain form: x by workshop, y by
/// route then link.
struct FlowAssignment {
  std::map<NodeId, int> x;
  std::array<std::vector<int>, 3> y;
};

/// Checks the flow model's domains and constraints directly against the
/// scenario: binary x, one workshop, signed y within each link's allowed
/// directions, breakdown-site and customer end points, workshop sources and
/// sinks, and conservation at every other covered node. Returns one message
/// per violation.
std::vector<std::string> check_flow_assignment(const Scenario& scenario, const FlowAssignment& a);

}  // namespace reroute::oracle
