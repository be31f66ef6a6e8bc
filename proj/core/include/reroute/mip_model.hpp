#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "reroute/scenario.hpp"
#include "reroute/solution.hpp"

namespace reroute {

/// Subset of {-1, 0, +1}.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr ValueSet(std::initializer_list<int> values) {
    for (int v : values) bits_ |= bit(v);
  }

  static constexpr ValueSet binary() { return {0, 1}; }
  static constexpr ValueSet signed_ternary() { return {-1, 0, 1}; }

  constexpr bool contains(int v) const { return v >= -1 && v <= 1 && (bits_ & bit(v)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
  constexpr bool fixed() const { return size() == 1; }
  constexpr int min() const { return (bits_ & 1) ? -1 : (bits_ & 2) ? 0 : 1; }
  constexpr int max() const { return (bits_ & 4) ? 1 : (bits_ & 2) ? 0 : -1; }
  constexpr void remove(int v) { bits_ &= static_cast<std::uint8_t>(~bit(v)); }

  friend constexpr bool operator==(ValueSet, ValueSet) = default;

  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(int v) { return static_cast<std::uint8_t>(1u << (v + 1)); }
  std::uint8_t bits_ = 0;
};

enum class VarKind { Workshop, Link };

/// x(i): workshop i is chosen. y(k, j): route k drives link j with (+1) or
/// against (-1) its reference direction.
struct Variable {
  VarKind kind = VarKind::Workshop;
  NodeId workshop;
  RouteKind route = RouteKind::TowOut;
  LinkId link;
  ValueSet domain;
  double cost = 0.0;  // objective coefficient, paid on |value|

  std::string name() const;
};

struct Term {
  std::size_t var;
  int coef;
};

/// sum(coef * value) == rhs
struct LinearConstraint {
  std::vector<Term> terms;
  int rhs = 0;
  std::string label;
};

/// The network-flow model of the breakdown problem. Variables are ordered x
/// by workshop id, then y by (route, link id).
class IntegerProgram {
 public:
  IntegerProgram(std::vector<Variable> variables, std::vector<LinearConstraint> constraints,
                 std::size_t num_workshops, std::size_t num_links);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  /// For tests that perturb the model.
  std::vector<LinearConstraint>& mutable_constraints() { return constraints_; }

  std::size_t num_x() const { return num_workshops_; }
  std::size_t num_y() const { return 3 * num_links_; }
  std::size_t num_links() const { return num_links_; }

  std::size_t x(NodeId workshop) const { return workshop.index(); }
  std::size_t y(RouteKind route, LinkId link) const {
    return num_workshops_ + route_index(route) * num_links_ + link.index();
  }

  /// Sum of cost * |value|.
  double objective(std::span<const int> values) const;
  /// Domains and every equality constraint hold.
  bool satisfies(std::span<const int> values) const;

  /// Text listing of variables, domains, objective and constraints.
  std::string dump() const;

 private:
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  std::size_t num_workshops_;
  std::size_t num_links_;
};

/// Instantiates the objective and the equality constraints for `scenario`:
/// one workshop chosen, tow-out ends and tow-back starts at the breakdown
/// site, delivery ends at the customer, the chosen workshop is the source of
/// tow-out and delivery and the sink of tow-back, and flow is conserved at
/// every other node. Throws NoBreakdown.
IntegerProgram build_program(const Scenario& scenario);

struct MipOptions {
  /// Optional per-(workshop, route) lower bounds on driving minutes, applied
  /// once the workshop is fixed. Empty means plain fixed-cost bounding.
  std::map<NodeId, std::array<double, 3>> route_lower_bounds;
};

struct MipSolution {
  std::vector<int> values;
  double objective_min = 0.0;
  SolveStats stats;

  int value(std::size_t var) const { return values.at(var); }
};

/// Depth-first branch and bound with constraint propagation. Returns a
/// provably optimal assignment; the first optimum found in branching order
/// wins ties. Throws Infeasible.
MipSolution solve_exact(const IntegerProgram& program, const MipOptions& options = {});

/// The chosen workshop of a feasible assignment.
NodeId selected_workshop(const IntegerProgram& program, const MipSolution& solution);

/// Follows the nonzero links of one route from `start` to `end`. Throws
/// ResidualCycle when links are left over or the walk gets stuck.
RoutePath walk_route(const RoadNetwork& network, RouteKind route, std::span<const int> link_values,
                     NodeId start, NodeId end);

std::array<RoutePath, 3> extract_routes(const MipSolution& solution, const IntegerProgram& program,
                                        const Scenario& scenario);

Solution to_solution(const MipSolution& solution, const IntegerProgram& program,
                     const Scenario& scenario);

/// build_program + solve_exact + extract_routes, timed.
MethodResult solve_mip(const Scenario& scenario, const MipOptions& options = {});

}  // namespace reroute
