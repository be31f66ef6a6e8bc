#include "reroute/scenario.hpp"

#include <cmath>

namespace reroute {

std::string_view to_string(RouteKind k) {
  switch (k) {
    case RouteKind::TowOut: return "tow-out";
    case RouteKind::TowBack: return "tow-back";
    case RouteKind::Delivery: return "delivery";
  }
  return "?";
}

std::optional<double> SpeedTable::resolve(RouteKind route, LinkId link) const {
  if (auto it = overrides_.find({route_number(route), link}); it != overrides_.end()) {
    return it->second;
  }
  return defaults_[route_index(route)];
}

std::vector<Issue> Scenario::collect_issues(const RoadNetwork& network,
                                            const std::map<NodeId, WorkshopParams>& workshops,
                                            const SpeedTable& speeds) {
  std::vector<Issue> issues;
  auto report = [&](ErrorCode code, std::string msg) { issues.push_back({code, std::move(msg)}); };

  if (!network.breakdown()) report(ErrorCode::NoBreakdown, "no breakdown site");

  for (const auto& [id, params] : workshops) {
    if (!network.has_node(id) || network.node(id).role != NodeRole::Workshop) {
      report(ErrorCode::UnknownNodeReference,
             "workshop parameters given for node " + std::to_string(id.value()) +
                 ", which is not a workshop");
      continue;
    }
    auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
    if (!ok(params.schedule_min) || !ok(params.maintenance_min)) {
      report(ErrorCode::MissingWorkshopParams,
             "workshop " + std::to_string(id.value()) + " times must be finite and >= 0");
    }
  }
  for (NodeId w : network.workshops()) {
    if (!workshops.contains(w)) {
      report(ErrorCode::MissingWorkshopParams,
             "workshop " + std::to_string(w.value()) + " has no scheduling/maintenance times");
    }
  }

  for (const auto& [key, kmh] : speeds.overrides()) {
    if (!network.has_link(key.second)) {
      report(ErrorCode::UnknownLink, "speed given for unknown link " +
                                         std::to_string(key.second.value()));
    }
  }
  for (RouteKind k : kAllRoutes) {
    for (const Link& l : network.links()) {
      std::optional<double> v = speeds.resolve(k, l.id);
      if (!v || !(*v > 0.0) || !std::isfinite(*v)) {
        report(ErrorCode::NonPositiveSpeed,
               "route " + std::to_string(route_number(k)) + " on link " +
                   std::to_string(l.id.value()) +
                   (v ? " has a non-positive speed" : " has no speed"));
      }
    }
  }
  return issues;
}

Scenario::Scenario(RoadNetwork network, std::map<NodeId, WorkshopParams> workshops,
                   SpeedTable speeds)
    : network_(std::move(network)), workshops_(std::move(workshops)), speeds_(std::move(speeds)) {
  std::vector<Issue> issues = collect_issues(network_, workshops_, speeds_);
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message);

  for (RouteKind k : kAllRoutes) {
    auto& kmh = speed_kmh_[route_index(k)];
    auto& minutes = link_time_min_[route_index(k)];
    kmh.resize(network_.num_links());
    minutes.resize(network_.num_links());
    for (const Link& l : network_.links()) {
      kmh[l.id.index()] = *speeds_.resolve(k, l.id);
      minutes[l.id.index()] = 60.0 * l.length_km / kmh[l.id.index()];
    }
  }
}

std::pair<NodeId, NodeId> Scenario::route_endpoints(RouteKind route, NodeId workshop) const {
  switch (route) {
    case RouteKind::TowOut: return {workshop, breakdown_node()};
    case RouteKind::TowBack: return {breakdown_node(), workshop};
    case RouteKind::Delivery: return {workshop, customer()};
  }
  return {};
}

bool Scenario::route_may_use(RouteKind route, LinkId link) const {
  const BreakdownSite& site = breakdown();
  if (route == RouteKind::TowOut) return link != site.downstream_link;
  if (route == RouteKind::TowBack) return link != site.upstream_link;
  return true;
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.network_.nodes() == b.network_.nodes() && a.network_.links() == b.network_.links() &&
         a.network_.breakdown() == b.network_.breakdown() && a.workshops_ == b.workshops_ &&
         a.speeds_ == b.speeds_;
}

}  // namespace reroute
