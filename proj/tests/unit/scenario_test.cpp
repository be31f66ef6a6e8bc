#include <random>
#include <string>

#include <gtest/gtest.h>

#include <reroute/fixtures.hpp>
#include <reroute/scenario_io.hpp>

#include "random_instance.hpp"

namespace reroute {
namespace {

const std::filesystem::path kFixtureDir = REROUTE_FIXTURE_DIR;

std::string replace_once(std::string text, std::string_view from, std::string_view to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) text.replace(at, from.size(), to);
  return text;
}

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error";
  return ErrorCode::ParseError;
}

TEST(LoadScenario, BaseHighwayFile) {
  Scenario s = load_scenario(kFixtureDir / "base_highway.scn");
  EXPECT_EQ(s.network().num_workshops(), 3u);
  EXPECT_EQ(s.network().num_nodes(), 12u);
  EXPECT_EQ(s.network().num_links(), 13u);
  EXPECT_EQ(s.customer(), NodeId(11));
  EXPECT_EQ(s.breakdown_node(), NodeId(12));
  for (NodeId w : s.network().workshops()) {
    EXPECT_EQ(s.workshop(w), (WorkshopParams{10.0, 100.0}));
  }
  for (const Link& l : s.network().links()) {
    EXPECT_EQ(l.length_km, l.id.value() >= 12 ? 5.0 : 10.0) << "link " << l.id.value();
    for (RouteKind k : kAllRoutes) EXPECT_EQ(s.speed_kmh(k, l.id), 60.0);
  }
  EXPECT_EQ(s, builtin_scenario("base_highway"));
}

TEST(LoadScenario, MissingFile) {
  EXPECT_THROW(load_scenario(kFixtureDir / "does_not_exist.scn"), Error);
}

TEST(LoadScenario, MissingMaintenanceTime) {
  std::string text = replace_once(std::string(fixture_text("base_highway")), "3, 10, 100", "3, 10");
  EXPECT_EQ(parse_error_code(text), ErrorCode::MissingWorkshopParams);
}

TEST(LoadScenario, MissingWorkshopRecord) {
  std::string text = replace_once(std::string(fixture_text("base_highway")), "3, 10, 100\n", "");
  EXPECT_EQ(parse_error_code(text), ErrorCode::MissingWorkshopParams);
}

TEST(LoadScenario, ZeroSpeedOverride) {
  std::string text = std::string(fixture_text("base_highway")) + "2, 5, 0\n";
  EXPECT_EQ(parse_error_code(text), ErrorCode::NonPositiveSpeed);
}

TEST(LoadScenario, MissingRouteSpeed) {
  std::string text = replace_once(std::string(fixture_text("base_highway")), "3, *, 60\n", "");
  EXPECT_EQ(parse_error_code(text), ErrorCode::NonPositiveSpeed);
}

TEST(LoadScenario, MissingBreakdown) {
  std::string text = replace_once(std::string(fixture_text("base_highway")),
                                  "7, 5, 5, forward, forward\n", "");
  EXPECT_EQ(parse_error_code(text), ErrorCode::NoBreakdown);
}

TEST(LoadScenario, IssuesCarryLineNumbers) {
  std::string text = replace_once(std::string(fixture_text("base_highway")), "5, 4, 5, 10, two-way",
                                  "5, 4, 5, ten, two-way");
  ScenarioDocument doc = parse_document(text, "base.scn");
  ASSERT_EQ(doc.issues.size(), 1u);
  EXPECT_EQ(doc.issues[0].code, ErrorCode::ParseError);
  EXPECT_EQ(doc.issues[0].message.rfind("base.scn:", 0), 0u) << doc.issues[0].message;
}

TEST(LinkTime, BaseLinkOne) {
  Scenario s = builtin_scenario("base_highway");
  for (RouteKind k : kAllRoutes) EXPECT_EQ(s.link_time_min(k, LinkId(1)), 10.0);
}

TEST(LinkTime, ModifiedTowBackOverHalfLink) {
  Scenario s = builtin_scenario("modified_highway");
  EXPECT_EQ(s.link_time_min(RouteKind::TowBack, LinkId(13)), 67.5);
}

TEST(LinkTime, DoublingSpeedHalvesTime) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Scenario s = testing::random_scenario(rng);
    SpeedTable faster;
    for (RouteKind k : kAllRoutes) {
      for (const Link& l : s.network().links()) faster.set_override(k, l.id, 2 * s.speed_kmh(k, l.id));
    }
    Scenario t(s.network(), s.workshops(), faster);
    for (RouteKind k : kAllRoutes) {
      for (const Link& l : s.network().links()) {
        EXPECT_EQ(t.link_time_min(k, l.id) * 2, s.link_time_min(k, l.id));
      }
    }
  }
}

TEST(Fixtures, ModifiedHighwaySpeeds) {
  Scenario s = builtin_scenario("modified_highway");
  EXPECT_EQ(s.network().link(LinkId(7)).length_km, 120.0);
  for (std::int32_t j = 1; j <= 13; ++j) {
    EXPECT_EQ(s.speed_kmh(RouteKind::TowBack, LinkId(j)), j <= 4 ? 30.0 : 80.0) << j;
  }
  EXPECT_EQ(s.workshop(NodeId(1)), (WorkshopParams{10.0, 100.0}));
  EXPECT_EQ(s.workshop(NodeId(2)), (WorkshopParams{20.0, 200.0}));
  EXPECT_EQ(s.workshop(NodeId(3)), (WorkshopParams{30.0, 300.0}));
}

TEST(Fixtures, UrbanLengths) {
  PathFixture fx = builtin_path_fixture("urban_paths");
  EXPECT_EQ(fx.lengths_km.size(), 42u);
  EXPECT_EQ(fx.lengths_km.at(LinkId(20)), 120.0);
  EXPECT_EQ(fx.lengths_km.at(LinkId(41)), 60.0);
  EXPECT_EQ(fx.lengths_km.at(LinkId(42)), 90.0);
  EXPECT_EQ(fx.speed_kmh, (std::array<double, 3>{30.0, 20.0, 30.0}));
  EXPECT_EQ(fx.workshop(), NodeId(6));
  EXPECT_EQ(fx.workshops.at(NodeId(6)), (WorkshopParams{60.0, 100.0}));
}

TEST(Fixtures, UnknownName) {
  try {
    builtin_fixture("nowhere");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFixture);
  }
}

TEST(Fixtures, UrbanIsNotSolvable) {
  try {
    builtin_scenario("urban_paths");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSolvable);
  }
  EXPECT_TRUE(std::holds_alternative<PathFixture>(builtin_fixture("urban_paths")));
  EXPECT_TRUE(std::holds_alternative<Scenario>(builtin_fixture("base_highway")));
}

TEST(Fixtures, CompiledTextMatchesShippedFiles) {
  for (const std::string& name : fixture_names()) {
    EXPECT_EQ(read_text_file(kFixtureDir / fixture_file_name(name)), fixture_text(name)) << name;
  }
}

TEST(Serialize, FixturesRoundTrip) {
  for (const char* name : {"base_highway", "modified_highway"}) {
    Scenario s = builtin_scenario(name);
    const std::string text = serialize_scenario(s);
    Scenario back = parse_scenario(text);
    EXPECT_EQ(back, s) << name;
    EXPECT_EQ(serialize_scenario(back), text) << name;
  }
}

TEST(Serialize, RandomScenariosRoundTrip) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Scenario s = testing::random_scenario(rng, {.blocked_half_link_probability = 0.2});
    EXPECT_EQ(parse_scenario(serialize_scenario(s)), s) << serialize_scenario(s);
  }
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(10.0), "10");
  EXPECT_EQ(format_number(67.5), "67.5");
  EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(Validate, BaseFixtureCounts) {
  ValidationReport r = validate_scenario_text(fixture_text("base_highway"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.num_nodes, 12u);
  EXPECT_EQ(r.num_links, 13u);
  EXPECT_EQ(r.num_directed_pairs, 24u);
}

TEST(Validate, DanglingLinkIsNamed) {
  std::string text = std::string(fixture_text("base_highway"));
  text = replace_once(text, "9, 8, 9, 10, two-way", "9, 8, 42, 10, two-way");
  ValidationReport r = validate_scenario_text(text);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].code, ErrorCode::DanglingEndpoint);
  EXPECT_NE(r.issues[0].message.find("link 9"), std::string::npos);
}

}  // namespace
}  // namespace reroute
