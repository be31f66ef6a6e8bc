#include "reroute/network.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

namespace reroute {
namespace {

constexpr double kSplitTolerance = 1e-9;

std::string node_label(NodeId id) { return "node " + std::to_string(id.value()); }
std::string link_label(LinkId id) { return "link " + std::to_string(id.value()); }

// Breadth-first reachability over allowed traversal directions.
std::vector<bool> reachable_from(std::size_t num_nodes, std::span<const Link> links, NodeId start) {
  std::vector<std::vector<std::size_t>> out(num_nodes);
  for (const Link& l : links) {
    if (l.allows_forward()) out[l.tail.index()].push_back(l.head.index());
    if (l.allows_reverse()) out[l.head.index()].push_back(l.tail.index());
  }
  std::vector<bool> seen(num_nodes, false);
  std::vector<std::size_t> frontier{start.index()};
  seen[start.index()] = true;
  while (!frontier.empty()) {
    std::size_t u = frontier.back();
    frontier.pop_back();
    for (std::size_t v : out[u]) {
      if (!seen[v]) {
        seen[v] = true;
        frontier.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Workshop: return "workshop";
    case NodeRole::Warehouse: return "warehouse";
    case NodeRole::Customer: return "customer";
    case NodeRole::Interchange: return "interchange";
    case NodeRole::BreakdownSite: return "breakdown";
  }
  return "?";
}

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::TwoWay: return "two-way";
    case Direction::OneWayForward: return "forward";
    case Direction::OneWayReverse: return "reverse";
  }
  return "?";
}

// --- IncidenceMatrix --------------------------------------------------------

IncidenceMatrix::IncidenceMatrix(std::size_t num_nodes, std::size_t num_links)
    : num_nodes_(num_nodes), num_links_(num_links), entries_(num_nodes * num_links, 0) {}

int IncidenceMatrix::column_sum(LinkId link) const {
  int sum = 0;
  for (std::size_t n = 0; n < num_nodes_; ++n) sum += entries_[n * num_links_ + link.index()];
  return sum;
}

std::string IncidenceMatrix::to_text() const {
  std::ostringstream os;
  os << std::setw(4) << "i\\j";
  for (std::size_t j = 1; j <= num_links_; ++j) os << std::setw(4) << j;
  os << '\n';
  for (std::size_t n = 0; n < num_nodes_; ++n) {
    os << std::setw(4) << n + 1;
    for (std::size_t j = 0; j < num_links_; ++j) {
      os << std::setw(4) << static_cast<int>(entries_[n * num_links_ + j]);
    }
    os << '\n';
  }
  return os.str();
}

// --- DirectedPairView -------------------------------------------------------

bool DirectedPairView::contains(NodeId from, NodeId to) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [&](const DirectedPair& p) { return p.from == from && p.to == to; });
}

// --- RoadNetwork ------------------------------------------------------------

std::vector<Issue> RoadNetwork::collect_issues(std::span<const NodeSpec> nodes,
                                               std::span<const Link> links) {
  std::vector<Issue> issues;
  auto report = [&](ErrorCode code, std::string msg) { issues.push_back({code, std::move(msg)}); };

  std::set<NodeId> node_ids;
  for (const NodeSpec& n : nodes) {
    if (!n.id.valid()) {
      report(ErrorCode::InvalidLayout, node_label(n.id) + ": ids start at 1");
    } else if (!node_ids.insert(n.id).second) {
      report(ErrorCode::DuplicateId, "duplicate " + node_label(n.id));
    }
    if (n.role == NodeRole::BreakdownSite) {
      report(ErrorCode::InvalidLayout,
             node_label(n.id) + ": breakdown sites are added by splitting a link, not declared");
    }
  }
  std::set<LinkId> link_ids;
  for (const Link& l : links) {
    if (!l.id.valid()) {
      report(ErrorCode::InvalidLayout, link_label(l.id) + ": ids start at 1");
    } else if (!link_ids.insert(l.id).second) {
      report(ErrorCode::DuplicateId, "duplicate " + link_label(l.id));
    }
    if (!node_ids.contains(l.tail) || !node_ids.contains(l.head)) {
      report(ErrorCode::DanglingEndpoint,
             link_label(l.id) + " references a node that does not exist");
    } else if (l.tail == l.head) {
      report(ErrorCode::DanglingEndpoint, link_label(l.id) + " starts and ends at the same node");
    }
    if (!(l.length_km > 0.0) || !std::isfinite(l.length_km)) {
      report(ErrorCode::NonPositiveLength, link_label(l.id) + " must have a positive length");
    }
  }
  if (!issues.empty()) return issues;

  const auto n_nodes = static_cast<std::int32_t>(nodes.size());
  const auto n_links = static_cast<std::int32_t>(links.size());
  if (n_nodes > 0 && node_ids.rbegin()->value() != n_nodes) {
    report(ErrorCode::InvalidLayout, "node ids must be exactly 1.." + std::to_string(n_nodes));
  }
  if (n_links > 0 && link_ids.rbegin()->value() != n_links) {
    report(ErrorCode::InvalidLayout, "link ids must be exactly 1.." + std::to_string(n_links));
  }
  if (!issues.empty()) return issues;

  std::vector<NodeRole> role(nodes.size());
  for (const NodeSpec& n : nodes) role[n.id.index()] = n.role;
  auto count = [&](NodeRole r) { return std::count(role.begin(), role.end(), r); };
  if (count(NodeRole::Warehouse) != 1 || count(NodeRole::Customer) != 1) {
    report(ErrorCode::MissingWarehouseOrCustomer,
           "the network needs exactly one warehouse and one customer");
    return issues;
  }
  const auto n_workshops = count(NodeRole::Workshop);
  for (std::int32_t id = 1; id <= n_nodes; ++id) {
    NodeRole r = role[static_cast<std::size_t>(id - 1)];
    bool in_workshop_block = id <= n_workshops;
    if ((r == NodeRole::Workshop) != in_workshop_block) {
      report(ErrorCode::InvalidLayout, "workshops must occupy node ids 1.." +
                                           std::to_string(n_workshops) + " (" +
                                           node_label(NodeId(id)) + ")");
    }
  }
  if (role[static_cast<std::size_t>(n_workshops)] != NodeRole::Warehouse) {
    report(ErrorCode::MissingWarehouseOrCustomer,
           "the warehouse must be node " + std::to_string(n_workshops + 1));
  }
  if (role.back() != NodeRole::Customer) {
    report(ErrorCode::MissingWarehouseOrCustomer,
           "the customer must be the last node (" + std::to_string(n_nodes) + ")");
  }
  if (!issues.empty()) return issues;

  NodeId warehouse(static_cast<std::int32_t>(n_workshops) + 1);
  std::vector<bool> seen = reachable_from(nodes.size(), links, warehouse);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      NodeId id(static_cast<std::int32_t>(i) + 1);
      report(ErrorCode::DisconnectedNode,
             node_label(id) + " cannot be reached from the warehouse");
    }
  }
  return issues;
}

RoadNetwork RoadNetwork::build(std::span<const NodeSpec> nodes, std::span<const Link> links) {
  std::vector<Issue> issues = collect_issues(nodes, links);
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message);

  RoadNetwork net;
  net.nodes_.assign(nodes.begin(), nodes.end());
  std::sort(net.nodes_.begin(), net.nodes_.end(),
            [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  net.links_.assign(links.begin(), links.end());
  std::sort(net.links_.begin(), net.links_.end(),
            [](const Link& a, const Link& b) { return a.id < b.id; });
  net.num_workshops_ = static_cast<std::size_t>(std::count_if(
      net.nodes_.begin(), net.nodes_.end(),
      [](const NodeSpec& n) { return n.role == NodeRole::Workshop; }));
  net.customer_ = net.nodes_.back().id;
  net.index_links();
  return net;
}

void RoadNetwork::index_links() {
  incident_.assign(nodes_.size(), {});
  for (const Link& l : links_) {
    incident_[l.tail.index()].push_back(l.id);
    incident_[l.head.index()].push_back(l.id);
  }
}

RoadNetwork RoadNetwork::inject_breakdown(const BreakdownSplit& split) const {
  if (breakdown_) {
    throw Error(ErrorCode::BreakdownAlreadyPresent,
                "the network already has a breakdown site at " + node_label(breakdown_->node));
  }
  if (!has_link(split.original_link)) {
    throw Error(ErrorCode::UnknownLink,
                "cannot split unknown " + link_label(split.original_link));
  }
  if (!(split.first_km > 0.0) || !(split.second_km > 0.0)) {
    throw Error(ErrorCode::NonPositiveLength, "both parts of a split link must be positive");
  }
  const Link& original = link(split.original_link);
  if (std::abs(split.first_km + split.second_km - original.length_km) > kSplitTolerance) {
    std::ostringstream msg;
    msg << "split lengths " << split.first_km << " + " << split.second_km << " do not add up to "
        << link_label(original.id) << "'s " << original.length_km << " km";
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }

  RoadNetwork out = *this;
  NodeId site(static_cast<std::int32_t>(nodes_.size()) + 1);
  LinkId upstream(static_cast<std::int32_t>(links_.size()) + 1);
  LinkId downstream(upstream.value() + 1);
  out.nodes_.push_back({site, NodeRole::BreakdownSite});
  out.links_.push_back({upstream, original.tail, site, split.first_km, split.first_direction});
  out.links_.push_back({downstream, site, original.head, split.second_km, split.second_direction});
  out.breakdown_ = BreakdownSite{site, original.id, upstream, downstream};
  out.index_links();
  return out;
}

IncidenceMatrix RoadNetwork::incidence() const {
  IncidenceMatrix m(nodes_.size(), links_.size());
  for (const Link& l : links_) {
    m.set(l.tail, l.id, 1);
    m.set(l.head, l.id, -1);
  }
  return m;
}

DirectedPairView RoadNetwork::directed_pairs() const {
  std::vector<DirectedPair> pairs;
  pairs.reserve(2 * links_.size());
  for (const Link& l : links_) {
    if (l.allows_forward()) pairs.push_back({l.tail, l.head, l.id, 1});
    if (l.allows_reverse()) pairs.push_back({l.head, l.tail, l.id, -1});
  }
  std::sort(pairs.begin(), pairs.end(), [](const DirectedPair& a, const DirectedPair& b) {
    return std::tie(a.from, a.to, a.link) < std::tie(b.from, b.to, b.link);
  });
  return DirectedPairView(std::move(pairs));
}

std::vector<NodeId> RoadNetwork::workshops() const {
  std::vector<NodeId> out;
  out.reserve(num_workshops_);
  for (std::size_t i = 1; i <= num_workshops_; ++i) out.emplace_back(static_cast<std::int32_t>(i));
  return out;
}

}  // namespace reroute
