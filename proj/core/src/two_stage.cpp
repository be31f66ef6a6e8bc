#include "reroute/two_stage.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <tuple>

namespace reroute {

RouteGraph RouteGraph::for_route(const Scenario& scenario, RouteKind route) {
  RouteGraph g(scenario.network().num_nodes());
  const DirectedPairView view = scenario.network().directed_pairs();
  for (const DirectedPair& p : view.pairs()) {
    if (!scenario.route_may_use(route, p.link)) continue;
    g.add_edge(p.from, p.to, p.link, scenario.link_time_min(route, p.link));
  }
  return g;
}

void RouteGraph::add_edge(NodeId from, NodeId to, LinkId link, double weight_min) {
  auto& edges = out_.at(from.index());
  RouteEdge e{to, link, weight_min};
  auto at = std::upper_bound(edges.begin(), edges.end(), e, [](const RouteEdge& a, const RouteEdge& b) {
    return std::tie(a.to, a.link) < std::tie(b.to, b.link);
  });
  edges.insert(at, e);
}

std::size_t RouteGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& edges : out_) n += edges.size();
  return n;
}

ShortestPathResult ShortestPathTree::path_to(NodeId target) const {
  ShortestPathResult r;
  r.minutes = distance.at(target.index());
  if (!r.reachable()) return r;
  for (NodeId at = target; at != source;) {
    const Predecessor& p = *predecessor[at.index()];
    r.nodes.push_back(at);
    r.links.push_back(p.link);
    at = p.node;
  }
  r.nodes.push_back(source);
  std::reverse(r.nodes.begin(), r.nodes.end());
  std::reverse(r.links.begin(), r.links.end());
  return r;
}

ShortestPathTree dijkstra(const RouteGraph& graph, NodeId source, std::optional<NodeId> target) {
  if (!graph.has_node(source)) {
    throw Error(ErrorCode::UnknownSource, "node " + std::to_string(source.value()) +
                                              " is not in the graph");
  }
  const std::size_t n = graph.num_nodes();
  ShortestPathTree t;
  t.source = source;
  t.distance.assign(n, kUnreachable);
  t.predecessor.assign(n, std::nullopt);
  t.settled.assign(n, false);

  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  t.distance[source.index()] = 0.0;
  heap.push({0.0, source});

  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    ++t.heap_pops;
    if (t.settled[u.index()] || d > t.distance[u.index()]) continue;
    t.settled[u.index()] = true;
    if (target && u == *target) break;

    for (const RouteEdge& e : graph.out_edges(u)) {
      const std::size_t v = e.to.index();
      if (t.settled[v]) continue;
      const double nd = d + e.weight_min;
      if (nd < t.distance[v]) {
        t.distance[v] = nd;
        t.predecessor[v] = ShortestPathTree::Predecessor{u, e.link};
        heap.push({nd, e.to});
      } else if (nd == t.distance[v] && u < t.predecessor[v]->node) {
        t.predecessor[v] = ShortestPathTree::Predecessor{u, e.link};
      }
    }
  }
  return t;
}

namespace {

class TwoStage {
 public:
  explicit TwoStage(const Scenario& s)
      : s_(s),
        graphs_{RouteGraph::for_route(s, RouteKind::TowOut),
                RouteGraph::for_route(s, RouteKind::TowBack),
                RouteGraph::for_route(s, RouteKind::Delivery)} {}

  // Evaluation with unreachable legs left at kUnreachable.
  WorkshopEvaluation evaluate(NodeId workshop) const {
    WorkshopEvaluation ev;
    ev.workshop = workshop;
    ev.params = s_.workshop(workshop);
    double driving = 0.0;
    for (RouteKind k : kAllRoutes) {
      auto [from, to] = s_.route_endpoints(k, workshop);
      ShortestPathTree tree = dijkstra(graphs_[route_index(k)], from, to);
      ev.heap_pops += tree.heap_pops;
      ev.routes[route_index(k)] = tree.path_to(to);
      driving += ev.routes[route_index(k)].minutes;
    }
    ev.total_min = ev.params.fixed_min() + driving;
    return ev;
  }

 private:
  const Scenario& s_;
  std::array<RouteGraph, 3> graphs_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

WorkshopEvaluation evaluate_workshop(const Scenario& scenario, NodeId workshop) {
  if (!scenario.workshops().contains(workshop)) {
    throw Error(ErrorCode::UnknownNodeReference,
                "node " + std::to_string(workshop.value()) + " is not a workshop");
  }
  WorkshopEvaluation ev = TwoStage(scenario).evaluate(workshop);
  for (RouteKind k : kAllRoutes) {
    if (!ev.routes[route_index(k)].reachable()) {
      throw Error(ErrorCode::Unreachable, "route " + std::to_string(route_number(k)) +
                                              " has no path for workshop " +
                                              std::to_string(workshop.value()));
    }
  }
  return ev;
}

TwoStageResult select_workshop(const Scenario& scenario) {
  const auto start = std::chrono::steady_clock::now();
  TwoStage solver(scenario);
  TwoStageResult result;
  result.stats.method = "two-stage";

  const WorkshopEvaluation* best = nullptr;
  for (NodeId w : scenario.network().workshops()) {
    WorkshopEvaluation ev = solver.evaluate(w);
    result.stats.heap_pops += ev.heap_pops;
    if (ev.total_min == kUnreachable) continue;
    result.evaluations.push_back(std::move(ev));
  }
  for (const WorkshopEvaluation& ev : result.evaluations) {
    if (!best || ev.total_min < best->total_min) best = &ev;
  }
  if (!best) {
    throw Error(ErrorCode::AllUnreachable, "no workshop can complete all three routes");
  }

  std::array<RoutePath, 3> routes;
  for (RouteKind k : kAllRoutes) {
    const ShortestPathResult& sp = best->routes[route_index(k)];
    routes[route_index(k)] = RoutePath{k, sp.nodes, sp.links, sp.minutes};
  }
  result.solution = make_solution(scenario, best->workshop, std::move(routes));
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

MethodResult solve_two_stage(const Scenario& scenario) {
  const auto start = std::chrono::steady_clock::now();
  TwoStageResult r = select_workshop(scenario);
  MethodResult out{std::move(r.solution), r.stats};
  out.stats.wall_ms = elapsed_ms(start);
  return out;
}

std::map<NodeId, std::array<double, 3>> shortest_route_bounds(const Scenario& scenario) {
  TwoStage solver(scenario);
  std::map<NodeId, std::array<double, 3>> out;
  for (NodeId w : scenario.network().workshops()) {
    WorkshopEvaluation ev = solver.evaluate(w);
    for (RouteKind k : kAllRoutes) out[w][route_index(k)] = ev.routes[route_index(k)].minutes;
  }
  return out;
}

}  // namespace reroute
