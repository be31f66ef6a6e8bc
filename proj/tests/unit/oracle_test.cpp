#include <random>
#include <set>

#include <gtest/gtest.h>

#include <reroute/fixtures.hpp>
#include <reroute/oracle.hpp>
#include <reroute/scenario_io.hpp>

#include "random_instance.hpp"

namespace reroute {
namespace {

TEST(EnumerateSimplePaths, BaseTowBackIncludesDirectPath) {
  Scenario s = builtin_scenario("base_highway");
  oracle::PathEnumeration e =
      oracle::enumerate_simple_paths(oracle::route_graph(s, RouteKind::TowBack), NodeId(12), NodeId(2));
  auto it = std::find_if(e.paths.begin(), e.paths.end(), [](const oracle::EnumeratedPath& p) {
    return p.nodes == std::vector<NodeId>{NodeId(12), NodeId(7), NodeId(2)};
  });
  ASSERT_NE(it, e.paths.end());
  EXPECT_EQ(it->cost_min, 15.0);
  EXPECT_EQ(it->links, (std::vector<LinkId>{LinkId(13), LinkId(2)}));
  EXPECT_EQ(e.min_cost(), 15.0);
}

TEST(EnumerateSimplePaths, SourceIsTarget) {
  RouteGraph g(3);
  g.add_edge(NodeId(1), NodeId(2), LinkId(1), 1.0);
  oracle::PathEnumeration e = oracle::enumerate_simple_paths(g, NodeId(2), NodeId(2));
  ASSERT_EQ(e.paths.size(), 1u);
  EXPECT_TRUE(e.paths[0].links.empty());
  EXPECT_EQ(e.paths[0].cost_min, 0.0);
}

TEST(EnumerateSimplePaths, AgainstTheOnlyEdge) {
  RouteGraph g(2);
  g.add_edge(NodeId(1), NodeId(2), LinkId(1), 1.0);
  oracle::PathEnumeration e = oracle::enumerate_simple_paths(g, NodeId(2), NodeId(1));
  EXPECT_TRUE(e.paths.empty());
  EXPECT_EQ(e.min_cost(), kUnreachable);
}

TEST(EnumerateSimplePaths, CapExceeded) {
  RouteGraph g(15);
  try {
    oracle::enumerate_simple_paths(g, NodeId(1), NodeId(2));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_NO_THROW(oracle::enumerate_simple_paths(g, NodeId(1), NodeId(2), 15));
}

TEST(EnumerateSimplePaths, CompleteGraphCount) {
  // Simple paths between two fixed nodes of K5: sum over k of 3!/(3-k)! = 16.
  RouteGraph g(5);
  std::int32_t link = 0;
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (a != b) g.add_edge(NodeId(a), NodeId(b), LinkId(++link), 1.0);
    }
  }
  EXPECT_EQ(oracle::enumerate_simple_paths(g, NodeId(1), NodeId(5)).paths.size(), 16u);
}

TEST(EnumerateSimplePaths, PathsAreSimple) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    RouteGraph g = testing::random_route_graph(rng, 8, 0.35);
    for (const auto& p : oracle::enumerate_simple_paths(g, NodeId(1), NodeId(8)).paths) {
      std::set<NodeId> seen(p.nodes.begin(), p.nodes.end());
      EXPECT_EQ(seen.size(), p.nodes.size());
      EXPECT_EQ(p.nodes.size(), p.links.size() + 1);
    }
  }
}

TEST(BruteForce, Fixtures) {
  Solution base = oracle::brute_force_solution(builtin_scenario("base_highway"));
  EXPECT_EQ(base.workshop, NodeId(2));
  EXPECT_EQ(base.total_min, 190.0);

  Solution mod = oracle::brute_force_solution(builtin_scenario("modified_highway"));
  EXPECT_EQ(mod.workshop, NodeId(1));
  EXPECT_EQ(mod.total_min, 522.75);
  EXPECT_EQ(mod.total_min, mod.params.fixed_min() + mod.driving_min());
}

TEST(BruteForce, BlockedBreakdownSite) {
  std::string text(fixture_text("base_highway"));
  text.replace(text.find("7, 5, 5, forward, forward"), 25, "7, 5, 5, reverse, forward");
  Scenario s = parse_scenario(text);
  try {
    oracle::brute_force_solution(s);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllUnreachable);
  }
}

TEST(BruteForce, CapExceeded) {
  EXPECT_THROW(oracle::brute_force_solution(builtin_scenario("base_highway"), 11), Error);
}

TEST(RouteGraph, MatchesDirectedPairView) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    Scenario s = testing::random_scenario(rng, {.blocked_half_link_probability = 0.2});
    for (RouteKind k : kAllRoutes) {
      RouteGraph a = oracle::route_graph(s, k);
      RouteGraph b = RouteGraph::for_route(s, k);
      ASSERT_EQ(a.num_edges(), b.num_edges());
      for (const NodeSpec& n : s.network().nodes()) {
        const auto& ea = a.out_edges(n.id);
        const auto& eb = b.out_edges(n.id);
        ASSERT_EQ(ea.size(), eb.size());
        for (std::size_t i = 0; i < ea.size(); ++i) {
          EXPECT_EQ(ea[i].to, eb[i].to);
          EXPECT_EQ(ea[i].link, eb[i].link);
          EXPECT_EQ(ea[i].weight_min, eb[i].weight_min);
        }
      }
    }
  }
}

}  // namespace
}  // namespace reroute
