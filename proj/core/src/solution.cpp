#include "reroute/solution.hpp"

namespace reroute {

double Solution::driving_min() const {
  double sum = 0.0;
  for (const RoutePath& r : routes) sum += r.driving_min;
  return sum;
}

double path_time_min(const Scenario& scenario, RouteKind route, std::span<const LinkId> links) {
  double minutes = 0.0;
  for (LinkId l : links) minutes += scenario.link_time_min(route, l);
  return minutes;
}

Solution make_solution(const Scenario& scenario, NodeId workshop, std::array<RoutePath, 3> routes) {
  Solution s;
  s.workshop = workshop;
  s.params = scenario.workshop(workshop);
  s.routes = std::move(routes);
  for (RouteKind k : kAllRoutes) {
    RoutePath& r = s.routes[route_index(k)];
    r.route = k;
    r.driving_min = path_time_min(scenario, k, r.links);
  }
  s.total_min = s.params.schedule_min + s.params.maintenance_min + s.driving_min();
  return s;
}

}  // namespace reroute
