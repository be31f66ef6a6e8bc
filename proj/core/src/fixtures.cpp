#include "reroute/fixtures.hpp"

#include "reroute/scenario_io.hpp"
#include "text_util.hpp"

namespace reroute {

namespace fixture_data {
extern const std::string_view kBaseHighway;
extern const std::string_view kModifiedHighway;
extern const std::string_view kUrbanPaths;
}  // namespace fixture_data

namespace {

struct Entry {
  std::string_view name;
  std::string_view file;
  FixtureKind kind;
  const std::string_view* text;
};

const std::array<Entry, 3> kFixtures{{
    {"base_highway", "base_highway.scn", FixtureKind::Scenario, &fixture_data::kBaseHighway},
    {"modified_highway", "modified_highway.scn", FixtureKind::Scenario,
     &fixture_data::kModifiedHighway},
    {"urban_paths", "urban_paths.paths", FixtureKind::Paths, &fixture_data::kUrbanPaths},
}};

const Entry& find(std::string_view name) {
  for (const Entry& e : kFixtures) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

template <class T>
T require_number(std::string_view s, const std::string& where) {
  auto v = detail::parse_number<T>(s);
  if (!v) throw Error(ErrorCode::ParseError, where + ": '" + std::string(s) + "' is not a number");
  return *v;
}

template <class IdT>
std::vector<IdT> parse_id_list(std::string_view field, const std::string& where) {
  std::vector<IdT> out;
  for (std::string_view tok : detail::split(field, ' ')) {
    if (tok.empty()) continue;
    out.emplace_back(require_number<std::int32_t>(tok, where));
  }
  return out;
}

}  // namespace

double PathFixture::link_time_min(RouteKind route, LinkId link) const {
  return 60.0 * lengths_km.at(link) / speed_kmh[route_index(route)];
}

PathFixture parse_path_fixture(std::string_view text, std::string_view source) {
  PathFixture fx;
  std::string section;
  std::array<bool, 3> seen_route{};
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (line.front() == '[') {
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      return;
    }
    auto f = detail::split_fields(line);
    auto expect = [&](std::size_t n) {
      if (f.size() != n) {
        throw Error(ErrorCode::ParseError, where + ": expected " + std::to_string(n) + " fields");
      }
    };
    if (section == "links") {
      expect(2);
      fx.lengths_km[LinkId(require_number<std::int32_t>(f[0], where))] =
          require_number<double>(f[1], where);
    } else if (section == "speeds") {
      expect(2);
      int k = require_number<int>(f[0], where);
      if (k < 1 || k > 3) throw Error(ErrorCode::ParseError, where + ": route must be 1, 2 or 3");
      double v = require_number<double>(f[1], where);
      if (!(v > 0.0)) throw Error(ErrorCode::NonPositiveSpeed, where + ": speed must be positive");
      fx.speed_kmh[static_cast<std::size_t>(k - 1)] = v;
    } else if (section == "workshops") {
      expect(3);
      fx.workshops[NodeId(require_number<std::int32_t>(f[0], where))] = {
          require_number<double>(f[1], where), require_number<double>(f[2], where)};
    } else if (section == "routes") {
      expect(4);
      int k = require_number<int>(f[0], where);
      if (k < 1 || k > 3) throw Error(ErrorCode::ParseError, where + ": route must be 1, 2 or 3");
      auto& r = fx.routes[static_cast<std::size_t>(k - 1)];
      r.workshop = NodeId(require_number<std::int32_t>(f[1], where));
      r.links = parse_id_list<LinkId>(f[2], where);
      r.nodes = parse_id_list<NodeId>(f[3], where);
      seen_route[static_cast<std::size_t>(k - 1)] = true;
    } else {
      throw Error(ErrorCode::ParseError, where + ": record outside of a known section");
    }
  });

  for (std::size_t k = 0; k < 3; ++k) {
    if (!seen_route[k]) {
      throw Error(ErrorCode::ParseError, std::string(source) + ": route " + std::to_string(k + 1) +
                                             " is missing");
    }
    if (!(fx.speed_kmh[k] > 0.0)) {
      throw Error(ErrorCode::NonPositiveSpeed,
                  std::string(source) + ": route " + std::to_string(k + 1) + " has no speed");
    }
    const auto& r = fx.routes[k];
    if (r.workshop != fx.routes[0].workshop) {
      throw Error(ErrorCode::ParseError, std::string(source) + ": routes disagree on the workshop");
    }
    if (r.nodes.size() != r.links.size() + 1) {
      throw Error(ErrorCode::ParseError, std::string(source) + ": route " + std::to_string(k + 1) +
                                             " needs one more node than links");
    }
    for (LinkId l : r.links) {
      if (!fx.lengths_km.contains(l)) {
        throw Error(ErrorCode::UnknownLink, std::string(source) + ": route " +
                                                std::to_string(k + 1) + " uses unknown link " +
                                                std::to_string(l.value()));
      }
    }
  }
  if (!fx.workshops.contains(fx.workshop())) {
    throw Error(ErrorCode::MissingWorkshopParams,
                std::string(source) + ": no times for workshop " +
                    std::to_string(fx.workshop().value()));
  }
  return fx;
}

PathRecomputation recompute(const PathFixture& fixture) {
  PathRecomputation out;
  out.workshop = fixture.workshop();
  out.params = fixture.workshops.at(out.workshop);
  double driving = 0.0;
  for (RouteKind k : kAllRoutes) {
    double km = 0.0;
    double minutes = 0.0;
    for (LinkId l : fixture.routes[route_index(k)].links) {
      km += fixture.lengths_km.at(l);
      minutes += fixture.link_time_min(k, l);
    }
    out.route_km[route_index(k)] = km;
    out.route_min[route_index(k)] = minutes;
    driving += minutes;
  }
  out.total_min = out.params.fixed_min() + driving;
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kFixtures) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

FixtureKind fixture_kind(std::string_view name) { return find(name).kind; }

std::string_view fixture_text(std::string_view name) { return *find(name).text; }

std::string fixture_file_name(std::string_view name) { return std::string(find(name).file); }

Scenario builtin_scenario(std::string_view name) {
  const Entry& e = find(name);
  if (e.kind != FixtureKind::Scenario) {
    throw Error(ErrorCode::NotSolvable,
                "fixture '" + std::string(name) +
                    "' only records paths and link lengths; it supports `recompute`, not solving");
  }
  return parse_scenario(*e.text, e.file);
}

PathFixture builtin_path_fixture(std::string_view name) {
  const Entry& e = find(name);
  if (e.kind != FixtureKind::Paths) {
    throw Error(ErrorCode::NotSolvable,
                "fixture '" + std::string(name) + "' is a full scenario, not a path fixture");
  }
  return parse_path_fixture(*e.text, e.file);
}

std::variant<Scenario, PathFixture> builtin_fixture(std::string_view name) {
  if (fixture_kind(name) == FixtureKind::Paths) return builtin_path_fixture(name);
  return builtin_scenario(name);
}

}  // namespace reroute
