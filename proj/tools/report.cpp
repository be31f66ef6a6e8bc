#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace reroute::cli {
namespace {

template <class Ids>
std::string join(const Ids& ids, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (auto id : ids) {
    if (!first) os << sep;
    os << id.value();
    first = false;
  }
  return os.str();
}

template <class Ids>
nlohmann::ordered_json id_array(const Ids& ids) {
  auto arr = nlohmann::ordered_json::array();
  for (auto id : ids) arr.push_back(id.value());
  return arr;
}

struct RouteRow {
  std::string name;
  std::string links;
  std::string nodes;
  std::vector<std::string> numbers;
};

// Text columns sized to their widest cell, numeric columns right-aligned.
void print_rows(std::ostream& os, const std::vector<std::string>& numeric_headers,
                const std::vector<RouteRow>& rows) {
  std::size_t links_w = 10;  // "path links"
  std::size_t nodes_w = 10;
  for (const RouteRow& r : rows) {
    links_w = std::max(links_w, r.links.size());
    nodes_w = std::max(nodes_w, r.nodes.size());
  }
  os << std::left << std::setw(14) << "route" << std::setw(static_cast<int>(links_w + 2))
     << "path links" << std::setw(static_cast<int>(nodes_w)) << "path nodes" << std::right;
  for (const std::string& h : numeric_headers) os << std::setw(10) << h;
  os << '\n';
  for (const RouteRow& r : rows) {
    os << std::left << std::setw(14) << r.name << std::setw(static_cast<int>(links_w + 2))
       << r.links << std::setw(static_cast<int>(nodes_w)) << r.nodes << std::right;
    for (const std::string& n : r.numbers) os << std::setw(10) << n;
    os << '\n';
  }
}

std::string route_name(RouteKind k) {
  return std::to_string(route_number(k)) + " " + std::string(to_string(k));
}

}  // namespace

std::string format_minutes(double minutes) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", minutes);
  return buf;
}

void print_table(std::ostream& os, const SolveReport& r) {
  const Solution& s = r.solution;
  os << "method       " << r.stats.method << '\n';
  os << "workshop     " << s.workshop.value() << '\n';
  std::vector<RouteRow> rows;
  for (const RoutePath& p : s.routes) {
    rows.push_back({route_name(p.route), join(p.links, ", "), join(p.nodes, " -> "),
                    {format_minutes(p.driving_min)}});
  }
  print_rows(os, {"minutes"}, rows);
  os << "schedule     " << format_minutes(s.params.schedule_min) << " min\n";
  os << "maintenance  " << format_minutes(s.params.maintenance_min) << " min\n";
  os << "driving      " << format_minutes(s.driving_min()) << " min\n";
  os << "total        " << format_minutes(s.total_min) << " min\n";
  if (!r.evaluations.empty()) {
    os << "per workshop ";
    for (std::size_t i = 0; i < r.evaluations.size(); ++i) {
      if (i) os << ", ";
      os << r.evaluations[i].workshop.value() << ": " << format_minutes(r.evaluations[i].total_min);
    }
    os << '\n';
  }
  os << "search       ";
  if (r.stats.method == "mip") {
    os << r.stats.search_nodes << " nodes, " << r.stats.branches << " branches";
  } else {
    os << r.stats.heap_pops << " heap pops";
  }
  os << ", " << std::fixed << std::setprecision(3) << r.stats.wall_ms << " ms\n";
  os.unsetf(std::ios::floatfield);
}

nlohmann::ordered_json to_json(const SolveReport& r) {
  const Solution& s = r.solution;
  nlohmann::ordered_json j;
  j["method"] = r.stats.method;
  j["workshop"] = s.workshop.value();
  j["total_min"] = s.total_min;
  j["schedule_min"] = s.params.schedule_min;
  j["maintenance_min"] = s.params.maintenance_min;
  j["driving_min"] = s.driving_min();
  auto routes = nlohmann::ordered_json::array();
  for (const RoutePath& p : s.routes) {
    nlohmann::ordered_json rj;
    rj["route"] = route_number(p.route);
    rj["name"] = to_string(p.route);
    rj["links"] = id_array(p.links);
    rj["nodes"] = id_array(p.nodes);
    rj["driving_min"] = p.driving_min;
    routes.push_back(std::move(rj));
  }
  j["routes"] = std::move(routes);
  if (!r.evaluations.empty()) {
    auto totals = nlohmann::ordered_json::array();
    for (const WorkshopEvaluation& ev : r.evaluations) {
      totals.push_back({{"workshop", ev.workshop.value()}, {"total_min", ev.total_min}});
    }
    j["workshop_totals"] = std::move(totals);
  }
  nlohmann::ordered_json stats;
  if (r.stats.method == "mip") {
    stats["search_nodes"] = r.stats.search_nodes;
    stats["branches"] = r.stats.branches;
  } else {
    stats["heap_pops"] = r.stats.heap_pops;
  }
  j["stats"] = std::move(stats);
  return j;
}

void print_table(std::ostream& os, const PathRecomputation& r, const PathFixture& fx) {
  os << "workshop     " << r.workshop.value() << '\n';
  std::vector<RouteRow> rows;
  for (RouteKind k : kAllRoutes) {
    const auto& route = fx.routes[route_index(k)];
    rows.push_back({route_name(k), join(route.links, ", "), join(route.nodes, " -> "),
                    {format_minutes(r.route_km[route_index(k)]),
                     format_minutes(r.route_min[route_index(k)])}});
  }
  print_rows(os, {"km", "minutes"}, rows);
  double driving = r.route_min[0] + r.route_min[1] + r.route_min[2];
  os << "schedule     " << format_minutes(r.params.schedule_min) << " min\n";
  os << "maintenance  " << format_minutes(r.params.maintenance_min) << " min\n";
  os << "driving      " << format_minutes(driving) << " min\n";
  os << "total        " << format_minutes(r.total_min) << " min\n";
}

nlohmann::ordered_json to_json(const PathRecomputation& r, const PathFixture& fx) {
  nlohmann::ordered_json j;
  j["workshop"] = r.workshop.value();
  j["total_min"] = r.total_min;
  j["schedule_min"] = r.params.schedule_min;
  j["maintenance_min"] = r.params.maintenance_min;
  auto routes = nlohmann::ordered_json::array();
  for (RouteKind k : kAllRoutes) {
    const auto& route = fx.routes[route_index(k)];
    routes.push_back({{"route", route_number(k)},
                      {"name", to_string(k)},
                      {"links", id_array(route.links)},
                      {"nodes", id_array(route.nodes)},
                      {"length_km", r.route_km[route_index(k)]},
                      {"driving_min", r.route_min[route_index(k)]}});
  }
  j["routes"] = std::move(routes);
  return j;
}

}  // namespace reroute::cli
