#pragma once

#include <reroute/mip_model.hpp>
#include <reroute/oracle.hpp>

namespace reroute::testing {

/// Re-indexes a solver assignment into the checker's plain form.
inline oracle::FlowAssignment to_flow_assignment(const IntegerProgram& program,
                                                 const MipSolution& solution) {
  oracle::FlowAssignment a;
  for (std::size_t v = 0; v < program.num_x(); ++v) {
    a.x[program.variables()[v].workshop] = solution.value(v);
  }
  for (RouteKind k : kAllRoutes) {
    auto& y = a.y[route_index(k)];
    for (std::size_t j = 1; j <= program.num_links(); ++j) {
      y.push_back(solution.value(program.y(k, LinkId(static_cast<std::int32_t>(j)))));
    }
  }
  return a;
}

}  // namespace reroute::testing
