#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reroute/network.hpp"

namespace reroute {

enum class RouteKind { TowOut = 1, TowBack = 2, Delivery = 3 };

inline constexpr std::array<RouteKind, 3> kAllRoutes{RouteKind::TowOut, RouteKind::TowBack,
                                                     RouteKind::Delivery};

constexpr int route_number(RouteKind k) { return static_cast<int>(k); }
constexpr std::size_t route_index(RouteKind k) { return static_cast<std::size_t>(k) - 1; }
std::string_view to_string(RouteKind k);

struct WorkshopParams {
  double schedule_min = 0.0;     // dispatching the tow truck
  double maintenance_min = 0.0;  // repair at the workshop

  double fixed_min() const { return schedule_min + maintenance_min; }
  friend bool operator==(const WorkshopParams&, const WorkshopParams&) = default;
};

/// Speeds in km/h: an optional default per route plus per-(route, link) overrides.
class SpeedTable {
 public:
  void set_default(RouteKind route, double kmh) { defaults_[route_index(route)] = kmh; }
  void set_override(RouteKind route, LinkId link, double kmh) {
    overrides_[{route_number(route), link}] = kmh;
  }

  /// Override first, then the route default.
  std::optional<double> resolve(RouteKind route, LinkId link) const;

  const std::array<std::optional<double>, 3>& defaults() const { return defaults_; }
  const std::map<std::pair<int, LinkId>, double>& overrides() const { return overrides_; }

  friend bool operator==(const SpeedTable&, const SpeedTable&) = default;

 private:
  std::array<std::optional<double>, 3> defaults_{};
  std::map<std::pair<int, LinkId>, double> overrides_;
};

/// A breakdown problem instance: the network with its breakdown site already
/// split in, plus per-workshop times and per-route speeds. Immutable.
class Scenario {
 public:
  /// Throws NoBreakdown, MissingWorkshopParams, UnknownNodeReference,
  /// UnknownLink or NonPositiveSpeed.
  Scenario(RoadNetwork network, std::map<NodeId, WorkshopParams> workshops, SpeedTable speeds);

  static std::vector<Issue> collect_issues(const RoadNetwork& network,
                                           const std::map<NodeId, WorkshopParams>& workshops,
                                           const SpeedTable& speeds);

  const RoadNetwork& network() const { return network_; }
  const std::map<NodeId, WorkshopParams>& workshops() const { return workshops_; }
  const WorkshopParams& workshop(NodeId id) const { return workshops_.at(id); }
  const SpeedTable& speeds() const { return speeds_; }
  NodeId customer() const { return network_.customer(); }
  NodeId breakdown_node() const { return network_.breakdown()->node; }
  const BreakdownSite& breakdown() const { return *network_.breakdown(); }

  double speed_kmh(RouteKind route, LinkId link) const {
    return speed_kmh_[route_index(route)][link.index()];
  }

  /// Minutes to drive `link` on `route`: 60 * length / speed.
  double link_time_min(RouteKind route, LinkId link) const {
    return link_time_min_[route_index(route)][link.index()];
  }

  /// Start and end node of a route once `workshop` is chosen.
  std::pair<NodeId, NodeId> route_endpoints(RouteKind route, NodeId workshop) const;

  /// Whether the route may use the link at all. Tow-out never leaves the
  /// breakdown site and tow-back never enters it through the other half.
  bool route_may_use(RouteKind route, LinkId link) const;

  friend bool operator==(const Scenario& a, const Scenario& b);

 private:
  RoadNetwork network_;
  std::map<NodeId, WorkshopParams> workshops_;
  SpeedTable speeds_;
  std::array<std::vector<double>, 3> speed_kmh_;
  std::array<std::vector<double>, 3> link_time_min_;
};

}  // namespace reroute
