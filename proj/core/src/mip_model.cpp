#include "reroute/mip_model.hpp"

#include <cstdlib>
#include <sstream>

#include "reroute/scenario_io.hpp"

namespace reroute {

std::string ValueSet::to_string() const {
  std::string out = "{";
  for (int v : {-1, 0, 1}) {
    if (!contains(v)) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

std::string Variable::name() const {
  if (kind == VarKind::Workshop) return "x[" + std::to_string(workshop.value()) + "]";
  return "y[" + std::to_string(route_number(route)) + "," + std::to_string(link.value()) + "]";
}

IntegerProgram::IntegerProgram(std::vector<Variable> variables,
                               std::vector<LinearConstraint> constraints,
                               std::size_t num_workshops, std::size_t num_links)
    : variables_(std::move(variables)),
      constraints_(std::move(constraints)),
      num_workshops_(num_workshops),
      num_links_(num_links) {}

double IntegerProgram::objective(std::span<const int> values) const {
  double sum = 0.0;
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (values[v] != 0) sum += variables_[v].cost;
  }
  return sum;
}

bool IntegerProgram::satisfies(std::span<const int> values) const {
  if (values.size() != variables_.size()) return false;
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (!variables_[v].domain.contains(values[v])) return false;
  }
  for (const LinearConstraint& c : constraints_) {
    int lhs = 0;
    for (const Term& t : c.terms) lhs += t.coef * values[t.var];
    if (lhs != c.rhs) return false;
  }
  return true;
}

std::string IntegerProgram::dump() const {
  std::ostringstream os;
  os << "variables " << variables_.size() << " (x " << num_x() << ", y " << num_y() << ")\n";
  for (const Variable& v : variables_) {
    os << "  " << v.name() << " in " << v.domain.to_string() << " cost " << format_number(v.cost)
       << '\n';
  }
  os << "objective minimize sum cost*|var|\n";
  os << "constraints " << constraints_.size() << '\n';
  for (const LinearConstraint& c : constraints_) {
    os << "  " << c.label << ":";
    for (const Term& t : c.terms) {
      os << ' ' << (t.coef < 0 ? '-' : '+');
      if (std::abs(t.coef) != 1) os << std::abs(t.coef);
      os << variables_[t.var].name();
    }
    os << " = " << c.rhs << '\n';
  }
  return os.str();
}

namespace {

ValueSet domain_for(const Link& link) {
  switch (link.direction) {
    case Direction::TwoWay: return ValueSet::signed_ternary();
    case Direction::OneWayForward: return {0, 1};
    case Direction::OneWayReverse: return {-1, 0};
  }
  return {};
}

class ProgramBuilder {
 public:
  explicit ProgramBuilder(const Scenario& s)
      : s_(s), net_(s.network()), a_(net_.incidence()), n_links_(net_.num_links()) {}

  IntegerProgram build() {
    add_variables();

    const NodeId site = s_.breakdown_node();
    const BreakdownSite& bd = s_.breakdown();
    const NodeId customer = s_.customer();
    using enum RouteKind;

    LinearConstraint one_workshop{{}, 1, "one workshop"};
    for (NodeId w : net_.workshops()) one_workshop.terms.push_back({w.index(), 1});
    add(std::move(one_workshop));

    add(node_balance(TowOut, site, -1, "tow-out ends at breakdown node"));
    add({{{y(TowOut, bd.downstream_link), 1}}, 0, "tow-out avoids downstream half-link"});
    add(node_balance(TowBack, site, 1, "tow-back starts at breakdown node"));
    add({{{y(TowBack, bd.upstream_link), 1}}, 0, "tow-back avoids upstream half-link"});
    add(node_balance(Delivery, customer, -1, "delivery ends at customer node"));
    add({{{y(Delivery, bd.upstream_link), 1}, {y(Delivery, bd.downstream_link), -1}},
         0,
         "delivery passes straight through breakdown node"});

    for (NodeId w : net_.workshops()) {
      for (RouteKind k : {TowOut, Delivery}) {
        LinearConstraint c = node_balance(k, w, 0, "route " + num(k) + " leaves workshop " +
                                                       std::to_string(w.value()) + " if chosen");
        c.terms.push_back({w.index(), -1});
        add(std::move(c));
      }
      LinearConstraint c = node_balance(
          TowBack, w, 0, "route 2 enters workshop " + std::to_string(w.value()) + " if chosen");
      c.terms.push_back({w.index(), 1});
      add(std::move(c));
    }

    const auto first_traffic = static_cast<std::int32_t>(net_.num_workshops()) + 1;
    for (RouteKind k : {TowOut, TowBack}) {
      for (std::int32_t n = first_traffic; n <= customer.value(); ++n) {
        add(node_balance(k, NodeId(n), 0,
                         "route " + num(k) + " conserves flow at node " + std::to_string(n)));
      }
    }
    for (std::int32_t n = first_traffic; n < customer.value(); ++n) {
      add(node_balance(Delivery, NodeId(n), 0,
                       "route 3 conserves flow at node " + std::to_string(n)));
    }
    return IntegerProgram(std::move(vars_), std::move(cons_), net_.num_workshops(), n_links_);
  }

 private:
  static std::string num(RouteKind k) { return std::to_string(route_number(k)); }

  std::size_t y(RouteKind k, LinkId l) const {
    return net_.num_workshops() + route_index(k) * n_links_ + l.index();
  }

  void add_variables() {
    for (NodeId w : net_.workshops()) {
      Variable v;
      v.kind = VarKind::Workshop;
      v.workshop = w;
      v.domain = ValueSet::binary();
      v.cost = s_.workshop(w).fixed_min();
      vars_.push_back(v);
    }
    for (RouteKind k : kAllRoutes) {
      for (const Link& l : net_.links()) {
        Variable v;
        v.kind = VarKind::Link;
        v.route = k;
        v.link = l.id;
        v.domain = domain_for(l);
        v.cost = s_.link_time_min(k, l.id);
        vars_.push_back(v);
      }
    }
  }

  // sum_j A[node, j] * y[k, j] = rhs
  LinearConstraint node_balance(RouteKind k, NodeId node, int rhs, std::string label) const {
    LinearConstraint c{{}, rhs, std::move(label)};
    for (LinkId l : net_.incident_links(node)) {
      int coef = a_.at(node, l);
      if (coef != 0) c.terms.push_back({y(k, l), coef});
    }
    return c;
  }

  void add(LinearConstraint c) { cons_.push_back(std::move(c)); }

  const Scenario& s_;
  const RoadNetwork& net_;
  IncidenceMatrix a_;
  std::size_t n_links_;
  std::vector<Variable> vars_;
  std::vector<LinearConstraint> cons_;
};

}  // namespace

IntegerProgram build_program(const Scenario& scenario) {
  if (!scenario.network().breakdown()) {
    throw Error(ErrorCode::NoBreakdown, "the scenario has no breakdown site");
  }
  return ProgramBuilder(scenario).build();
}

NodeId selected_workshop(const IntegerProgram& program, const MipSolution& solution) {
  for (std::size_t i = 0; i < program.num_x(); ++i) {
    if (solution.values.at(i) == 1) return program.variables()[i].workshop;
  }
  throw Error(ErrorCode::Infeasible, "no workshop selected");
}

}  // namespace reroute
