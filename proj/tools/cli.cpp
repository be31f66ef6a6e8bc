#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <stdexcept>

#include <reroute/fixtures.hpp>
#include <reroute/mip_model.hpp>
#include <reroute/scenario_io.hpp>
#include <reroute/two_stage.hpp>

#include "CLI11.hpp"
#include "report.hpp"

namespace reroute::cli {
namespace {

struct Source {
  std::string fixture;
  std::string scenario_path;
};

void add_source_options(CLI::App* cmd, Source& src) {
  auto* f = cmd->add_option("--fixture", src.fixture, "Built-in fixture name");
  auto* s = cmd->add_option("--scenario", src.scenario_path, "Scenario file");
  f->excludes(s);
  s->excludes(f);
}

Scenario load(const Source& src) {
  if (!src.fixture.empty()) return builtin_scenario(src.fixture);
  if (!src.scenario_path.empty()) return load_scenario(src.scenario_path);
  throw std::invalid_argument("one of --fixture or --scenario is required");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible:
    case ErrorCode::Unreachable:
    case ErrorCode::AllUnreachable:
    case ErrorCode::ResidualCycle:
      return kInfeasible;
    case ErrorCode::UnknownFixture:
    case ErrorCode::NotSolvable:
    case ErrorCode::CapExceeded:
    case ErrorCode::UnknownSource:
      return kUsage;
    default:
      return kParse;
  }
}

SolveReport run_method(const Scenario& scenario, const std::string& method) {
  if (method == "mip") {
    MethodResult r = solve_mip(scenario);
    return {std::move(r.solution), std::move(r.stats), {}};
  }
  TwoStageResult r = select_workshop(scenario);
  return {std::move(r.solution), std::move(r.stats), std::move(r.evaluations)};
}

int cmd_solve(const Source& src, const std::string& method, const std::string& format,
              std::ostream& out) {
  Scenario scenario = load(src);
  std::vector<SolveReport> reports;
  if (method == "mip" || method == "both") reports.push_back(run_method(scenario, "mip"));
  if (method == "two-stage" || method == "both") {
    reports.push_back(run_method(scenario, "two-stage"));
  }

  bool agree = true;
  double diff = 0.0;
  if (reports.size() == 2) {
    diff = std::abs(reports[0].solution.total_min - reports[1].solution.total_min);
    agree = objectives_agree(reports[0].solution.total_min, reports[1].solution.total_min);
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    if (reports.size() == 1) {
      j = to_json(reports[0]);
    } else {
      auto arr = nlohmann::ordered_json::array();
      for (const SolveReport& r : reports) arr.push_back(to_json(r));
      j["reports"] = std::move(arr);
      j["agreement"] = {{"equal", agree}, {"difference_min", diff}};
    }
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << '\n';
      print_table(out, reports[i]);
    }
    if (reports.size() == 2) {
      out << '\n';
      if (agree) {
        out << "agreement    OK, both " << format_minutes(reports[0].solution.total_min) << " min\n";
      } else {
        out << "agreement    DIFFER, mip " << format_minutes(reports[0].solution.total_min)
            << " min vs two-stage " << format_minutes(reports[1].solution.total_min) << " min\n";
      }
    }
  }
  return agree ? kOk : kDisagreement;
}

int cmd_recompute(const Source& src, const std::string& format, std::ostream& out) {
  PathFixture fx = !src.scenario_path.empty()
                       ? parse_path_fixture(read_text_file(src.scenario_path), src.scenario_path)
                       : builtin_path_fixture(src.fixture.empty() ? "urban_paths" : src.fixture);
  PathRecomputation r = recompute(fx);
  if (format == "json") {
    out << to_json(r, fx).dump(2) << '\n';
  } else {
    print_table(out, r, fx);
  }
  return kOk;
}

int cmd_bench(const Source& src, int repeats, std::ostream& out) {
  Scenario scenario = load(src);
  BenchResult b = run_bench(scenario, repeats);
  out << std::left << std::setw(12) << "method" << std::right << std::setw(8) << "repeats"
      << std::setw(14) << "median_ms" << '\n';
  for (const BenchTiming* t : {&b.mip, &b.two_stage}) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", t->median_ms);
    out << std::left << std::setw(12) << t->method << std::right << std::setw(8)
        << t->samples_ms.size() << std::setw(14) << buf << '\n';
  }
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.1f", b.ratio());
  out << "mip / two-stage median ratio: " << ratio << '\n';
  return kOk;
}

int cmd_validate(const Source& src, std::ostream& out) {
  std::string text;
  std::string name;
  if (!src.fixture.empty()) {
    if (fixture_kind(src.fixture) != FixtureKind::Scenario) {
      throw Error(ErrorCode::NotSolvable, "fixture '" + src.fixture + "' is not a scenario");
    }
    text = std::string(fixture_text(src.fixture));
    name = fixture_file_name(src.fixture);
  } else if (!src.scenario_path.empty()) {
    text = read_text_file(src.scenario_path);
    name = src.scenario_path;
  } else {
    throw std::invalid_argument("one of --fixture or --scenario is required");
  }
  ValidationReport report = validate_scenario_text(text, name);
  if (report.ok()) {
    out << "OK, " << report.num_nodes << " nodes, " << report.num_links << " links, "
        << report.num_directed_pairs << " directed pairs\n";
    return kOk;
  }
  for (const Issue& issue : report.issues) {
    out << to_string(issue.code) << ": " << issue.message << '\n';
  }
  out << report.issues.size() << " problem(s) found\n";
  return kParse;
}

}  // namespace

double median(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  const std::size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid),
                   samples.end());
  double upper = samples[mid];
  if (samples.size() % 2 == 1) return upper;
  double lower = *std::max_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

BenchResult run_bench(const Scenario& scenario, int repeats) {
  BenchResult b;
  b.mip.method = "mip";
  b.two_stage.method = "two-stage";
  using clock = std::chrono::steady_clock;
  auto time_ms = [](auto&& fn) {
    auto start = clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };
  for (int i = 0; i < repeats; ++i) {
    b.mip.samples_ms.push_back(time_ms([&] { (void)solve_mip(scenario); }));
    b.two_stage.samples_ms.push_back(time_ms([&] { (void)solve_two_stage(scenario); }));
  }
  b.mip.median_ms = median(b.mip.samples_ms);
  b.two_stage.median_ms = median(b.two_stage.samples_ms);
  return b;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workshop and route selection for a broken-down vehicle", "reroute"};
  app.require_subcommand(1);

  Source src;
  std::string method = "both";
  std::string format = "table";
  int repeats = 100;

  auto* solve = app.add_subcommand("solve", "Solve a scenario with one or both methods");
  add_source_options(solve, src);
  solve->add_option("--method", method, "mip, two-stage or both")
      ->check(CLI::IsMember({"mip", "two-stage", "both"}));
  solve->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* recompute_cmd =
      app.add_subcommand("recompute", "Recompute driving times of recorded routes");
  add_source_options(recompute_cmd, src);
  recompute_cmd->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* bench = app.add_subcommand("bench", "Median wall time of both methods");
  add_source_options(bench, src);
  bench->add_option("--repeats", repeats, "Number of timed solves per method")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check a scenario without solving it");
  add_source_options(validate, src);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(src, method, format, out);
    if (*recompute_cmd) return cmd_recompute(src, format, out);
    if (*bench) return cmd_bench(src, repeats, out);
    if (*validate) return cmd_validate(src, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace reroute::cli
