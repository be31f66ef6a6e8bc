#include "reroute/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "text_util.hpp"

namespace reroute {
namespace {

using detail::parse_number;
using detail::split_fields;
using detail::trim;

enum class Section { None, Nodes, Links, Breakdown, Workshops, Speeds };

std::optional<NodeRole> parse_role(std::string_view s) {
  if (s == "workshop") return NodeRole::Workshop;
  if (s == "warehouse") return NodeRole::Warehouse;
  if (s == "customer") return NodeRole::Customer;
  if (s == "interchange") return NodeRole::Interchange;
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) {
  if (s == "two-way") return Direction::TwoWay;
  if (s == "forward") return Direction::OneWayForward;
  if (s == "reverse") return Direction::OneWayReverse;
  return std::nullopt;
}

class LineParser {
 public:
  LineParser(ScenarioDocument& doc, std::string_view source) : doc_(doc), source_(source) {}

  void parse(std::string_view text) {
    detail::for_each_line(text, [this](std::size_t line_no, std::string_view line) {
      line_ = line_no;
      handle(line);
    });
  }

 private:
  void fail(ErrorCode code, const std::string& msg) {
    doc_.issues.push_back(
        {code, std::string(source_) + ":" + std::to_string(line_) + ": " + msg});
  }

  void handle(std::string_view line) {
    if (line.front() == '[') {
      if (line.back() != ']') return fail(ErrorCode::ParseError, "unterminated section header");
      std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name == "nodes") section_ = Section::Nodes;
      else if (name == "links") section_ = Section::Links;
      else if (name == "breakdown") section_ = Section::Breakdown;
      else if (name == "workshops") section_ = Section::Workshops;
      else if (name == "speeds") section_ = Section::Speeds;
      else fail(ErrorCode::ParseError, "unknown section [" + std::string(name) + "]");
      return;
    }
    auto f = split_fields(line);
    switch (section_) {
      case Section::None: return fail(ErrorCode::ParseError, "record outside of any section");
      case Section::Nodes: return node(f);
      case Section::Links: return link(f);
      case Section::Breakdown: return breakdown(f);
      case Section::Workshops: return workshop(f);
      case Section::Speeds: return speed(f);
    }
  }

  bool expect_fields(const std::vector<std::string_view>& f, std::size_t n, const char* what) {
    if (f.size() == n) return true;
    fail(ErrorCode::ParseError, std::string(what) + " records have " + std::to_string(n) +
                                    " fields, found " + std::to_string(f.size()));
    return false;
  }

  template <class T>
  std::optional<T> number(std::string_view s, const char* field) {
    auto v = parse_number<T>(s);
    if (!v) fail(ErrorCode::ParseError, std::string(field) + ": '" + std::string(s) +
                                            "' is not a number");
    return v;
  }

  void node(const std::vector<std::string_view>& f) {
    if (!expect_fields(f, 2, "node")) return;
    auto id = number<std::int32_t>(f[0], "node id");
    auto role = parse_role(f[1]);
    if (!role) return fail(ErrorCode::ParseError, "unknown node role '" + std::string(f[1]) + "'");
    if (id) doc_.nodes.push_back({NodeId(*id), *role});
  }

  void link(const std::vector<std::string_view>& f) {
    if (!expect_fields(f, 5, "link")) return;
    auto id = number<std::int32_t>(f[0], "link id");
    auto tail = number<std::int32_t>(f[1], "tail");
    auto head = number<std::int32_t>(f[2], "head");
    auto len = number<double>(f[3], "length_km");
    auto dir = parse_direction(f[4]);
    if (!dir) return fail(ErrorCode::ParseError, "unknown direction '" + std::string(f[4]) + "'");
    if (id && tail && head && len) {
      doc_.links.push_back({LinkId(*id), NodeId(*tail), NodeId(*head), *len, *dir});
    }
  }

  void breakdown(const std::vector<std::string_view>& f) {
    if (doc_.breakdown) return fail(ErrorCode::ParseError, "only one breakdown record is allowed");
    if (!expect_fields(f, 5, "breakdown")) return;
    auto id = number<std::int32_t>(f[0], "link");
    auto first = number<double>(f[1], "first_km");
    auto second = number<double>(f[2], "second_km");
    auto d1 = parse_direction(f[3]);
    auto d2 = parse_direction(f[4]);
    if (!d1 || !d2) return fail(ErrorCode::ParseError, "unknown breakdown link direction");
    if (id && first && second) {
      doc_.breakdown = BreakdownSplit{LinkId(*id), *first, *second, *d1, *d2};
    }
  }

  void workshop(const std::vector<std::string_view>& f) {
    if (f.size() < 3) {
      return fail(ErrorCode::MissingWorkshopParams,
                  "workshop records need node, schedule_min and maintenance_min");
    }
    if (!expect_fields(f, 3, "workshop")) return;
    auto id = number<std::int32_t>(f[0], "node");
    auto st = number<double>(f[1], "schedule_min");
    auto m = number<double>(f[2], "maintenance_min");
    if (!id || !st || !m) return;
    if (!doc_.workshops.emplace(NodeId(*id), WorkshopParams{*st, *m}).second) {
      fail(ErrorCode::DuplicateId, "workshop " + std::to_string(*id) + " listed twice");
    }
  }

  void speed(const std::vector<std::string_view>& f) {
    if (!expect_fields(f, 3, "speed")) return;
    auto route = number<int>(f[0], "route");
    auto kmh = number<double>(f[2], "km_per_h");
    if (!route || !kmh) return;
    if (*route < 1 || *route > 3) return fail(ErrorCode::ParseError, "route must be 1, 2 or 3");
    auto k = static_cast<RouteKind>(*route);
    if (!(*kmh > 0.0)) {
      return fail(ErrorCode::NonPositiveSpeed,
                  "route " + std::to_string(*route) + " link " + std::string(f[1]) +
                      ": speed must be positive");
    }
    if (f[1] == "*") {
      doc_.speeds.set_default(k, *kmh);
    } else if (auto id = number<std::int32_t>(f[1], "link")) {
      doc_.speeds.set_override(k, LinkId(*id), *kmh);
    }
  }

  ScenarioDocument& doc_;
  std::string_view source_;
  Section section_ = Section::None;
  std::size_t line_ = 0;
};

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

ScenarioDocument parse_document(std::string_view text, std::string_view source) {
  ScenarioDocument doc;
  LineParser(doc, source).parse(text);
  return doc;
}

std::vector<Issue> diagnose(const ScenarioDocument& doc) {
  std::vector<Issue> issues = doc.issues;
  if (!issues.empty()) return issues;

  std::vector<Issue> net_issues = RoadNetwork::collect_issues(doc.nodes, doc.links);
  if (!net_issues.empty()) return net_issues;

  RoadNetwork network = RoadNetwork::build(doc.nodes, doc.links);
  if (doc.breakdown) {
    try {
      network = network.inject_breakdown(*doc.breakdown);
    } catch (const Error& e) {
      issues.push_back({e.code(), e.what()});
      return issues;
    }
  }
  return Scenario::collect_issues(network, doc.workshops, doc.speeds);
}

Scenario to_scenario(const ScenarioDocument& doc) {
  std::vector<Issue> issues = diagnose(doc);
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message);
  RoadNetwork network = RoadNetwork::build(doc.nodes, doc.links).inject_breakdown(*doc.breakdown);
  return Scenario(std::move(network), doc.workshops, doc.speeds);
}

Scenario parse_scenario(std::string_view text, std::string_view source) {
  return to_scenario(parse_document(text, source));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_text_file(path), path.string());
}

std::string serialize_scenario(const Scenario& scenario) {
  const RoadNetwork& net = scenario.network();
  const BreakdownSite& site = scenario.breakdown();
  std::ostringstream os;

  os << "[nodes]\n# id, role\n";
  for (const NodeSpec& n : net.nodes()) {
    if (n.role == NodeRole::BreakdownSite) continue;
    os << n.id << ", " << to_string(n.role) << '\n';
  }

  os << "\n[links]\n# id, tail, head, length_km, direction\n";
  for (const Link& l : net.links()) {
    if (l.id == site.upstream_link || l.id == site.downstream_link) continue;
    os << l.id << ", " << l.tail << ", " << l.head << ", " << format_number(l.length_km) << ", "
       << to_string(l.direction) << '\n';
  }

  const Link& up = net.link(site.upstream_link);
  const Link& down = net.link(site.downstream_link);
  os << "\n[breakdown]\n# link, first_km, second_km, first_direction, second_direction\n"
     << site.original_link << ", " << format_number(up.length_km) << ", "
     << format_number(down.length_km) << ", " << to_string(up.direction) << ", "
     << to_string(down.direction) << '\n';

  os << "\n[workshops]\n# node, schedule_min, maintenance_min\n";
  for (const auto& [id, p] : scenario.workshops()) {
    os << id << ", " << format_number(p.schedule_min) << ", " << format_number(p.maintenance_min)
       << '\n';
  }

  os << "\n[speeds]\n# route, link, km_per_h\n";
  const SpeedTable& speeds = scenario.speeds();
  for (RouteKind k : kAllRoutes) {
    if (auto d = speeds.defaults()[route_index(k)]) {
      os << route_number(k) << ", *, " << format_number(*d) << '\n';
    }
  }
  for (const auto& [key, kmh] : speeds.overrides()) {
    os << key.first << ", " << key.second << ", " << format_number(kmh) << '\n';
  }
  return os.str();
}

ValidationReport validate_scenario_text(std::string_view text, std::string_view source) {
  ValidationReport report;
  ScenarioDocument doc = parse_document(text, source);
  report.issues = diagnose(doc);
  if (report.issues.empty()) {
    Scenario s = to_scenario(doc);
    report.num_nodes = s.network().num_nodes();
    report.num_links = s.network().num_links();
    report.num_directed_pairs = s.network().directed_pairs().size();
  }
  return report;
}

}  // namespace reroute
