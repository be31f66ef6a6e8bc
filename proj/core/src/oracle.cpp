#include "reroute/oracle.hpp"

#include <algorithm>

namespace reroute::oracle {
namespace {

class PathWalker {
 public:
  PathWalker(const RouteGraph& g, NodeId target, PathEnumeration& out)
      : g_(g), target_(target), out_(out), on_path_(g.num_nodes(), false) {}

  void run(NodeId source) {
    nodes_.push_back(source);
    on_path_[source.index()] = true;
    visit(source, 0.0);
  }

 private:
  void visit(NodeId at, double cost) {
    if (at == target_) {
      out_.paths.push_back({nodes_, links_, cost});
      return;
    }
    for (const RouteEdge& e : g_.out_edges(at)) {
      if (on_path_[e.to.index()]) continue;
      on_path_[e.to.index()] = true;
      nodes_.push_back(e.to);
      links_.push_back(e.link);
      visit(e.to, cost + e.weight_min);
      links_.pop_back();
      nodes_.pop_back();
      on_path_[e.to.index()] = false;
    }
  }

  const RouteGraph& g_;
  NodeId target_;
  PathEnumeration& out_;
  std::vector<bool> on_path_;
  std::vector<NodeId> nodes_;
  std::vector<LinkId> links_;
};

// Path cost re-summed link by link in travel order.
double path_cost(const Scenario& s, RouteKind k, const std::vector<LinkId>& links) {
  double c = 0.0;
  for (LinkId l : links) c += 60.0 * s.network().link(l).length_km / s.speed_kmh(k, l);
  return c;
}

}  // namespace

double PathEnumeration::min_cost() const {
  double best = kUnreachable;
  for (const EnumeratedPath& p : paths) best = std::min(best, p.cost_min);
  return best;
}

RouteGraph route_graph(const Scenario& scenario, RouteKind route) {
  const RoadNetwork& net = scenario.network();
  RouteGraph g(net.num_nodes());
  const BreakdownSite& site = scenario.breakdown();
  for (const Link& l : net.links()) {
    if (route == RouteKind::TowOut && l.id == site.downstream_link) continue;
    if (route == RouteKind::TowBack && l.id == site.upstream_link) continue;
    const double w = 60.0 * l.length_km / scenario.speed_kmh(route, l.id);
    if (l.direction != Direction::OneWayReverse) g.add_edge(l.tail, l.head, l.id, w);
    if (l.direction != Direction::OneWayForward) g.add_edge(l.head, l.tail, l.id, w);
  }
  return g;
}

PathEnumeration enumerate_simple_paths(const RouteGraph& graph, NodeId source, NodeId target,
                                       std::size_t max_nodes) {
  if (graph.num_nodes() > max_nodes) {
    throw Error(ErrorCode::CapExceeded, "graph has " + std::to_string(graph.num_nodes()) +
                                            " nodes, above the oracle cap of " +
                                            std::to_string(max_nodes));
  }
  PathEnumeration out;
  PathWalker(graph, target, out).run(source);
  return out;
}

Solution brute_force_solution(const Scenario& scenario, std::size_t max_nodes) {
  if (scenario.network().num_nodes() > max_nodes) {
    throw Error(ErrorCode::CapExceeded, "scenario is above the oracle cap");
  }
  std::array<RouteGraph, 3> graphs{route_graph(scenario, RouteKind::TowOut),
                                   route_graph(scenario, RouteKind::TowBack),
                                   route_graph(scenario, RouteKind::Delivery)};

  bool found = false;
  double best_total = 0.0;
  NodeId best_workshop;
  std::array<EnumeratedPath, 3> best_paths;

  for (NodeId w : scenario.network().workshops()) {
    std::array<PathEnumeration, 3> e;
    for (RouteKind k : kAllRoutes) {
      auto [from, to] = scenario.route_endpoints(k, w);
      e[route_index(k)] = enumerate_simple_paths(graphs[route_index(k)], from, to, max_nodes);
    }
    const WorkshopParams& p = scenario.workshop(w);
    for (const EnumeratedPath& p1 : e[0].paths) {
      for (const EnumeratedPath& p2 : e[1].paths) {
        for (const EnumeratedPath& p3 : e[2].paths) {
          const double total = p.schedule_min + p.maintenance_min + p1.cost_min + p2.cost_min +
                               p3.cost_min;
          if (!found || total < best_total) {
            found = true;
            best_total = total;
            best_workshop = w;
            best_paths = {p1, p2, p3};
          }
        }
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::AllUnreachable, "no workshop has a feasible triple of routes");
  }

  Solution s;
  s.workshop = best_workshop;
  s.params = scenario.workshop(best_workshop);
  for (RouteKind k : kAllRoutes) {
    const EnumeratedPath& p = best_paths[route_index(k)];
    s.routes[route_index(k)] = RoutePath{k, p.nodes, p.links, path_cost(scenario, k, p.links)};
  }
  s.total_min = best_total;
  return s;
}

std::vector<std::string> check_flow_assignment(const Scenario& scenario, const FlowAssignment& a) {
  std::vector<std::string> bad;
  const RoadNetwork& net = scenario.network();
  const BreakdownSite& site = scenario.breakdown();
  const std::size_t n_links = net.num_links();
  const auto n1 = static_cast<std::int32_t>(net.num_workshops());
  const std::int32_t n2 = scenario.customer().value();

  auto y = [&](int k, LinkId l) { return a.y[static_cast<std::size_t>(k - 1)][l.index()]; };
  // Net outflow of route k at node n: +y on links leaving in reference
  // direction from n, -y on links whose head is n.
  auto outflow = [&](int k, NodeId n) {
    int sum = 0;
    for (const Link& l : net.links()) {
      if (l.tail == n) sum += y(k, l.id);
      if (l.head == n) sum -= y(k, l.id);
    }
    return sum;
  };
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  int chosen = 0;
  for (std::int32_t i = 1; i <= n1; ++i) {
    auto it = a.x.find(NodeId(i));
    int xi = it == a.x.end() ? 0 : it->second;
    expect(xi == 0 || xi == 1, "x[" + std::to_string(i) + "] is not binary");
    chosen += xi;
  }
  expect(chosen == 1, "exactly one workshop must be chosen");

  for (int k = 1; k <= 3; ++k) {
    expect(a.y[static_cast<std::size_t>(k - 1)].size() == n_links,
           "route " + std::to_string(k) + " has the wrong number of link values");
  }
  if (!bad.empty()) return bad;

  for (int k = 1; k <= 3; ++k) {
    for (const Link& l : net.links()) {
      int v = y(k, l.id);
      std::string name = "y[" + std::to_string(k) + "," + std::to_string(l.id.value()) + "]";
      expect(v >= -1 && v <= 1, name + " is outside {-1,0,1}");
      expect(!(v == 1 && l.direction == Direction::OneWayReverse),
             name + " drives a reverse-only link forwards");
      expect(!(v == -1 && l.direction == Direction::OneWayForward),
             name + " drives a forward-only link backwards");
    }
  }

  const NodeId b = site.node;
  expect(outflow(1, b) == -1, "tow-out must end at the breakdown site");
  expect(y(1, site.downstream_link) == 0, "tow-out may not use the downstream half-link");
  expect(outflow(2, b) == 1, "tow-back must start at the breakdown site");
  expect(y(2, site.upstream_link) == 0, "tow-back may not use the upstream half-link");
  expect(outflow(3, NodeId(n2)) == -1, "delivery must end at the customer");
  expect(y(3, site.upstream_link) == y(3, site.downstream_link),
         "delivery must treat both half-links alike");

  for (std::int32_t i = 1; i <= n1; ++i) {
    auto it = a.x.find(NodeId(i));
    int xi = it == a.x.end() ? 0 : it->second;
    const std::string w = " at workshop " + std::to_string(i);
    expect(outflow(1, NodeId(i)) == xi, "tow-out flow is wrong" + w);
    expect(outflow(3, NodeId(i)) == xi, "delivery flow is wrong" + w);
    expect(outflow(2, NodeId(i)) == -xi, "tow-back flow is wrong" + w);
  }
  for (std::int32_t n = n1 + 1; n <= n2; ++n) {
    const std::string at = " at node " + std::to_string(n);
    expect(outflow(1, NodeId(n)) == 0, "tow-out is not conserved" + at);
    expect(outflow(2, NodeId(n)) == 0, "tow-back is not conserved" + at);
    if (n != n2) expect(outflow(3, NodeId(n)) == 0, "delivery is not conserved" + at);
  }
  return bad;
}

}  // namespace reroute::oracle
