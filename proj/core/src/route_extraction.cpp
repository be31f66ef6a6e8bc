#include <algorithm>
#include <chrono>
#include <set>

#include "reroute/mip_model.hpp"

namespace reroute {

RoutePath walk_route(const RoadNetwork& network, RouteKind route, std::span<const int> link_values,
                     NodeId start, NodeId end) {
  RoutePath path;
  path.route = route;
  path.nodes.push_back(start);

  std::set<LinkId> remaining;
  for (std::size_t j = 0; j < link_values.size(); ++j) {
    if (link_values[j] != 0) remaining.insert(LinkId(static_cast<std::int32_t>(j) + 1));
  }

  NodeId at = start;
  while (at != end) {
    auto next = std::find_if(remaining.begin(), remaining.end(), [&](LinkId id) {
      const Link& l = network.link(id);
      int sign = link_values[id.index()];
      return (sign > 0 && l.tail == at) || (sign < 0 && l.head == at);
    });
    if (next == remaining.end()) {
      throw Error(ErrorCode::ResidualCycle, "route " + std::to_string(route_number(route)) +
                                                " stops at node " + std::to_string(at.value()) +
                                                " before reaching node " +
                                                std::to_string(end.value()));
    }
    const Link& l = network.link(*next);
    at = link_values[next->index()] > 0 ? l.head : l.tail;
    path.links.push_back(l.id);
    path.nodes.push_back(at);
    remaining.erase(next);
  }
  if (!remaining.empty()) {
    throw Error(ErrorCode::ResidualCycle,
                "route " + std::to_string(route_number(route)) + " leaves " +
                    std::to_string(remaining.size()) + " selected link(s) off its path");
  }
  return path;
}

std::array<RoutePath, 3> extract_routes(const MipSolution& solution, const IntegerProgram& program,
                                        const Scenario& scenario) {
  const NodeId workshop = selected_workshop(program, solution);
  std::array<RoutePath, 3> routes;
  for (RouteKind k : kAllRoutes) {
    const std::size_t first = program.y(k, LinkId(1));
    std::span<const int> values(solution.values.data() + first, program.num_links());
    auto [start, end] = scenario.route_endpoints(k, workshop);
    routes[route_index(k)] = walk_route(scenario.network(), k, values, start, end);
  }
  return routes;
}

Solution to_solution(const MipSolution& solution, const IntegerProgram& program,
                     const Scenario& scenario) {
  return make_solution(scenario, selected_workshop(program, solution),
                       extract_routes(solution, program, scenario));
}

MethodResult solve_mip(const Scenario& scenario, const MipOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  IntegerProgram program = build_program(scenario);
  MipSolution mip = solve_exact(program, options);
  MethodResult out{to_solution(mip, program, scenario), mip.stats};
  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace reroute
