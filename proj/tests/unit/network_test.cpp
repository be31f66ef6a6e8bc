#include <random>

#include <gtest/gtest.h>

#include <reroute/fixtures.hpp>
#include <reroute/network.hpp>
#include <reroute/scenario_io.hpp>

#include "random_instance.hpp"

namespace reroute {
namespace {

RoadNetwork base_network() { return builtin_scenario("base_highway").network(); }

// The base highway before the breakdown site is split in.
RoadNetwork base_without_breakdown() {
  ScenarioDocument doc = parse_document(fixture_text("base_highway"));
  return RoadNetwork::build(doc.nodes, doc.links);
}

std::vector<NodeSpec> two_nodes() {
  return {{NodeId(1), NodeRole::Warehouse}, {NodeId(2), NodeRole::Customer}};
}

TEST(Incidence, BaseEntries) {
  IncidenceMatrix a = base_network().incidence();
  ASSERT_EQ(a.num_nodes(), 12u);
  ASSERT_EQ(a.num_links(), 13u);
  EXPECT_EQ(a.at(NodeId(1), LinkId(1)), 1);
  EXPECT_EQ(a.at(NodeId(5), LinkId(1)), -1);
  EXPECT_EQ(a.at(NodeId(12), LinkId(12)), -1);
  EXPECT_EQ(a.at(NodeId(12), LinkId(13)), 1);
  EXPECT_EQ(a.at(NodeId(6), LinkId(12)), 1);
  EXPECT_EQ(a.at(NodeId(7), LinkId(13)), -1);
  EXPECT_EQ(a.at(NodeId(3), LinkId(1)), 0);
}

TEST(Incidence, ColumnsHaveOneTailAndOneHead) {
  RoadNetwork net = base_network();
  IncidenceMatrix a = net.incidence();
  for (const Link& l : net.links()) {
    EXPECT_EQ(a.column_sum(l.id), 0);
    int nonzero = 0;
    for (const NodeSpec& n : net.nodes()) nonzero += a.at(n.id, l.id) != 0;
    EXPECT_EQ(nonzero, 2) << "link " << l.id.value();
  }
}

TEST(Incidence, EmptyLinkSet) {
  IncidenceMatrix a(5, 0);
  EXPECT_EQ(a.num_links(), 0u);
  EXPECT_EQ(a.to_text(), " i\\j\n   1\n   2\n   3\n   4\n   5\n");
}

TEST(Incidence, TextIsStableAcrossRebuilds) {
  const std::string first = base_network().incidence().to_text();
  EXPECT_EQ(first, base_network().incidence().to_text());
  // Row 12 of the base table.
  EXPECT_NE(first.find("\n  12   0   0   0   0   0   0   0   0   0   0   0  -1   1\n"),
            std::string::npos);
}

TEST(DirectedPairs, BaseHighwayHas24) {
  DirectedPairView pairs = base_network().directed_pairs();
  EXPECT_EQ(pairs.size(), 24u);
  EXPECT_TRUE(pairs.contains(NodeId(6), NodeId(12)));
  EXPECT_TRUE(pairs.contains(NodeId(12), NodeId(7)));
  EXPECT_FALSE(pairs.contains(NodeId(12), NodeId(6)));
  EXPECT_FALSE(pairs.contains(NodeId(7), NodeId(12)));
  EXPECT_TRUE(pairs.contains(NodeId(6), NodeId(7)));
  EXPECT_TRUE(pairs.contains(NodeId(7), NodeId(6)));
}

TEST(DirectedPairs, BaseHighwayBeforeBreakdownHas22) {
  RoadNetwork net = base_without_breakdown();
  EXPECT_EQ(net.num_nodes(), 11u);
  EXPECT_EQ(net.directed_pairs().size(), 22u);
}

TEST(DirectedPairs, SortedByFromToLink) {
  const DirectedPairView view = base_network().directed_pairs();
  const auto& p = view.pairs();
  for (std::size_t i = 1; i < p.size(); ++i) {
    EXPECT_TRUE(std::tie(p[i - 1].from, p[i - 1].to, p[i - 1].link) <
                std::tie(p[i].from, p[i].to, p[i].link));
  }
}

TEST(DirectedPairs, SingleTwoWayLink) {
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(2), 3.0, Direction::TwoWay}};
  RoadNetwork net = RoadNetwork::build(two_nodes(), links);
  EXPECT_EQ(net.num_nodes(), 2u);
  EXPECT_EQ(net.directed_pairs().size(), 2u);
}

TEST(DirectedPairs, OneWayLinksContributeOnePair) {
  std::vector<NodeSpec> nodes{{NodeId(1), NodeRole::Warehouse},
                              {NodeId(2), NodeRole::Interchange},
                              {NodeId(3), NodeRole::Customer}};
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(2), 1.0, Direction::OneWayForward},
                          {LinkId(2), NodeId(3), NodeId(2), 1.0, Direction::OneWayReverse}};
  const DirectedPairView view = RoadNetwork::build(nodes, links).directed_pairs();
  ASSERT_EQ(view.size(), 2u);
  EXPECT_EQ(view.pairs()[0], (DirectedPair{NodeId(1), NodeId(2), LinkId(1), 1}));
  EXPECT_EQ(view.pairs()[1], (DirectedPair{NodeId(2), NodeId(3), LinkId(2), -1}));
}

TEST(Build, RejectsSelfLoop) {
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(1), 3.0, Direction::TwoWay}};
  try {
    RoadNetwork::build(two_nodes(), links);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DanglingEndpoint);
  }
}

TEST(Build, RejectsDanglingEndpoint) {
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(9), 3.0, Direction::TwoWay}};
  auto issues = RoadNetwork::collect_issues(two_nodes(), links);
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().code, ErrorCode::DanglingEndpoint);
  EXPECT_NE(issues.front().message.find("link 1"), std::string::npos);
}

TEST(Build, RejectsDuplicateIds) {
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(2), 3.0, Direction::TwoWay},
                          {LinkId(1), NodeId(2), NodeId(1), 3.0, Direction::TwoWay}};
  auto issues = RoadNetwork::collect_issues(two_nodes(), links);
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().code, ErrorCode::DuplicateId);
}

TEST(Build, RejectsNonPositiveLength) {
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(2), 0.0, Direction::TwoWay}};
  EXPECT_THROW(RoadNetwork::build(two_nodes(), links), Error);
}

TEST(Build, RejectsUnreachableNode) {
  std::vector<NodeSpec> nodes{{NodeId(1), NodeRole::Warehouse},
                              {NodeId(2), NodeRole::Interchange},
                              {NodeId(3), NodeRole::Customer}};
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(3), 1.0, Direction::TwoWay},
                          {LinkId(2), NodeId(2), NodeId(1), 1.0, Direction::OneWayForward}};
  auto issues = RoadNetwork::collect_issues(nodes, links);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].code, ErrorCode::DisconnectedNode);
}

TEST(Build, RequiresWarehouseAndCustomer) {
  std::vector<NodeSpec> nodes{{NodeId(1), NodeRole::Warehouse}, {NodeId(2), NodeRole::Interchange}};
  std::vector<Link> links{{LinkId(1), NodeId(1), NodeId(2), 1.0, Direction::TwoWay}};
  auto issues = RoadNetwork::collect_issues(nodes, links);
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues[0].code, ErrorCode::MissingWarehouseOrCustomer);
}

TEST(InjectBreakdown, BaseSplit) {
  RoadNetwork net = base_network();
  ASSERT_TRUE(net.breakdown().has_value());
  EXPECT_EQ(*net.breakdown(), (BreakdownSite{NodeId(12), LinkId(7), LinkId(12), LinkId(13)}));
  EXPECT_EQ(net.node(NodeId(12)).role, NodeRole::BreakdownSite);
  EXPECT_EQ(net.link(LinkId(12)), (Link{LinkId(12), NodeId(6), NodeId(12), 5.0,
                                        Direction::OneWayForward}));
  EXPECT_EQ(net.link(LinkId(13)), (Link{LinkId(13), NodeId(12), NodeId(7), 5.0,
                                        Direction::OneWayForward}));
  EXPECT_EQ(net.customer(), NodeId(11));
}

TEST(InjectBreakdown, ModifiedLengths) {
  RoadNetwork net = builtin_scenario("modified_highway").network();
  EXPECT_EQ(net.link(LinkId(12)).length_km, 30.0);
  EXPECT_EQ(net.link(LinkId(13)).length_km, 90.0);
}

TEST(InjectBreakdown, Errors) {
  RoadNetwork net = base_without_breakdown();
  auto code_of = [&](const BreakdownSplit& split) {
    try {
      net.inject_breakdown(split);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;  // no error at all
  };
  EXPECT_EQ(code_of({LinkId(7), 4.0, 5.0}), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of({LinkId(99), 5.0, 5.0}), ErrorCode::UnknownLink);
  EXPECT_EQ(code_of({LinkId(7), 0.0, 10.0}), ErrorCode::NonPositiveLength);
  // Within the 1e-9 tolerance.
  EXPECT_NO_THROW(net.inject_breakdown({LinkId(7), 5.0 + 1e-12, 5.0}));

  RoadNetwork split = net.inject_breakdown({LinkId(7), 5.0, 5.0});
  try {
    split.inject_breakdown({LinkId(3), 5.0, 5.0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BreakdownAlreadyPresent);
  }
}

TEST(InjectBreakdown, PreservesExistingPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Scenario s = testing::random_scenario(rng);
    const RoadNetwork& net = s.network();
    const BreakdownSite& site = *net.breakdown();
    const Link& original = net.link(site.original_link);
    EXPECT_EQ(net.link(site.upstream_link).length_km + net.link(site.downstream_link).length_km,
              original.length_km);
    EXPECT_EQ(net.link(site.upstream_link).tail, original.tail);
    EXPECT_EQ(net.link(site.downstream_link).head, original.head);

    // Rebuild without the two half-links and compare pair views.
    std::vector<NodeSpec> nodes(net.nodes().begin(), net.nodes().end() - 1);
    std::vector<Link> links(net.links().begin(), net.links().end() - 2);
    const DirectedPairView before = RoadNetwork::build(nodes, links).directed_pairs();
    const DirectedPairView after = net.directed_pairs();
    for (const DirectedPair& p : before.pairs()) {
      EXPECT_NE(std::find(after.pairs().begin(), after.pairs().end(), p), after.pairs().end());
    }
  }
}

TEST(Properties, PairsAgreeWithIncidence) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Scenario s = testing::random_scenario(rng);
    const RoadNetwork& net = s.network();
    IncidenceMatrix a = net.incidence();
    std::size_t expected = 0;
    for (const Link& l : net.links()) {
      EXPECT_EQ(a.column_sum(l.id), 0);
      expected += l.allows_forward() + l.allows_reverse();
    }
    const DirectedPairView view = net.directed_pairs();
    EXPECT_EQ(view.size(), expected);
    for (const DirectedPair& p : view.pairs()) {
      EXPECT_EQ(a.at(p.from, p.link), p.sign);
      EXPECT_EQ(a.at(p.to, p.link), -p.sign);
      EXPECT_TRUE(net.link(p.link).allows_sign(p.sign));
    }
  }
}

TEST(Properties, AllTwoWayGivesTwoPairsPerLink) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Scenario s = testing::random_scenario(rng);
    std::vector<NodeSpec> nodes(s.network().nodes().begin(), s.network().nodes().end() - 1);
    std::vector<Link> links(s.network().links().begin(), s.network().links().end() - 2);
    for (Link& l : links) l.direction = Direction::TwoWay;
    EXPECT_EQ(RoadNetwork::build(nodes, links).directed_pairs().size(), 2 * links.size());
  }
}

}  // namespace
}  // namespace reroute
