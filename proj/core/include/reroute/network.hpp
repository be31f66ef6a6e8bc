#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reroute/error.hpp"
#include "reroute/ids.hpp"

namespace reroute {

enum class NodeRole { Workshop, Warehouse, Customer, Interchange, BreakdownSite };

/// Which way a link may be driven relative to its tail->head reference direction.
enum class Direction { TwoWay, OneWayForward, OneWayReverse };

std::string_view to_string(NodeRole role);
std::string_view to_string(Direction direction);

struct NodeSpec {
  NodeId id;
  NodeRole role = NodeRole::Interchange;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct Link {
  LinkId id;
  NodeId tail;
  NodeId head;
  double length_km = 0.0;
  Direction direction = Direction::TwoWay;

  bool allows_forward() const { return direction != Direction::OneWayReverse; }
  bool allows_reverse() const { return direction != Direction::OneWayForward; }
  /// Signs y may take in a route: +1 with the reference direction, -1 against it.
  bool allows_sign(int sign) const {
    return sign == 0 || (sign > 0 ? allows_forward() : allows_reverse());
  }

  friend bool operator==(const Link&, const Link&) = default;
};

/// Where the vehicle failed: the carriageway `original_link` split at a point
/// `first_km` from its tail and `second_km` from its head.
struct BreakdownSplit {
  LinkId original_link;
  double first_km = 0.0;
  double second_km = 0.0;
  Direction first_direction = Direction::OneWayForward;
  Direction second_direction = Direction::OneWayForward;
};

struct BreakdownSite {
  NodeId node;
  LinkId original_link;
  LinkId upstream_link;    // tail of the original link -> breakdown
  LinkId downstream_link;  // breakdown -> head of the original link

  friend bool operator==(const BreakdownSite&, const BreakdownSite&) = default;
};

/// Signed node x link incidence: +1 at a link's tail, -1 at its head.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t num_nodes, std::size_t num_links);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_links() const { return num_links_; }

  int at(NodeId node, LinkId link) const {
    return entries_[node.index() * num_links_ + link.index()];
  }
  void set(NodeId node, LinkId link, int value) {
    entries_[node.index() * num_links_ + link.index()] = static_cast<signed char>(value);
  }
  int column_sum(LinkId link) const;

  /// Whitespace-aligned table, one row per node, columns ordered by link id.
  std::string to_text() const;

 private:
  std::size_t num_nodes_;
  std::size_t num_links_;
  std::vector<signed char> entries_;
};

struct DirectedPair {
  NodeId from;
  NodeId to;
  LinkId link;
  int sign = 1;  // +1 if from->to is the link's reference direction

  friend bool operator==(const DirectedPair&, const DirectedPair&) = default;
};

/// One entry per (link, allowed direction), sorted by (from, to, link).
class DirectedPairView {
 public:
  explicit DirectedPairView(std::vector<DirectedPair> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<DirectedPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(NodeId from, NodeId to) const;

 private:
  std::vector<DirectedPair> pairs_;
};

/// Immutable road graph. Node ids are laid out as workshops 1..N1, the
/// warehouse N1+1, interchanges, the customer N2, then an optional breakdown
/// site N2+1 created by inject_breakdown().
class RoadNetwork {
 public:
  /// Validates and builds; throws Error with the first issue found.
  static RoadNetwork build(std::span<const NodeSpec> nodes, std::span<const Link> links);

  /// Every problem build() would reject, in a stable order.
  static std::vector<Issue> collect_issues(std::span<const NodeSpec> nodes,
                                           std::span<const Link> links);

  RoadNetwork inject_breakdown(const BreakdownSplit& split) const;

  IncidenceMatrix incidence() const;
  DirectedPairView directed_pairs() const;

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_links() const { return links_.size(); }
  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const NodeSpec& node(NodeId id) const { return nodes_.at(id.index()); }
  const Link& link(LinkId id) const { return links_.at(id.index()); }
  bool has_node(NodeId id) const { return id.valid() && id.index() < nodes_.size(); }
  bool has_link(LinkId id) const { return id.valid() && id.index() < links_.size(); }

  /// Links touching `node`, ascending by id.
  const std::vector<LinkId>& incident_links(NodeId node) const {
    return incident_.at(node.index());
  }

  std::vector<NodeId> workshops() const;
  std::size_t num_workshops() const { return num_workshops_; }
  NodeId warehouse() const { return NodeId(static_cast<std::int32_t>(num_workshops_) + 1); }
  NodeId customer() const { return customer_; }
  const std::optional<BreakdownSite>& breakdown() const { return breakdown_; }

 private:
  RoadNetwork() = default;
  void index_links();

  std::vector<NodeSpec> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> incident_;
  std::size_t num_workshops_ = 0;
  NodeId customer_;
  std::optional<BreakdownSite> breakdown_;
};

}  // namespace reroute
