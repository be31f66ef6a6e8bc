#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <optional>

#include "reroute/mip_model.hpp"

namespace reroute {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr std::array<int, 3> kValueOrder{0, 1, -1};

// Depth-first search over variables in index order. Each node fixes one
// variable and propagates the equality constraints to a fixpoint: a value is
// dropped from a domain when no choice of the other variables in some
// constraint can reach the right-hand side with it. A single free variable
// is therefore fixed directly, and an unreachable right-hand side fails.
class BranchAndBound {
 public:
  BranchAndBound(const IntegerProgram& program, const MipOptions& options)
      : p_(program), options_(options) {
    const auto& vars = p_.variables();
    domain_.reserve(vars.size());
    for (const Variable& v : vars) domain_.push_back(v.domain);
    watchers_.resize(vars.size());
    const auto& cons = p_.constraints();
    for (std::size_t c = 0; c < cons.size(); ++c) {
      for (const Term& t : cons[c].terms) watchers_[t.var].push_back(c);
    }
    queued_.assign(cons.size(), false);
  }

  std::optional<MipSolution> run() {
    for (std::size_t c = 0; c < p_.constraints().size(); ++c) enqueue(c);
    for (std::size_t v = 0; v < domain_.size(); ++v) {
      if (domain_[v].empty()) return std::nullopt;
    }
    if (propagate()) search();
    if (best_.empty()) return std::nullopt;

    MipSolution out;
    out.values = best_;
    out.objective_min = incumbent_;
    out.stats.method = "mip";
    out.stats.search_nodes = nodes_;
    out.stats.branches = branches_;
    return out;
  }

 private:
  void search() {
    ++nodes_;
    if (lower_bound() >= incumbent_) return;

    std::size_t var = domain_.size();
    for (std::size_t v = 0; v < domain_.size(); ++v) {
      if (!domain_[v].fixed()) {
        var = v;
        break;
      }
    }
    if (var == domain_.size()) {
      // Every domain is a singleton and propagation is at a fixpoint, so each
      // constraint's reachable range collapsed onto its right-hand side.
      incumbent_ = lower_bound();
      best_.resize(domain_.size());
      for (std::size_t v = 0; v < domain_.size(); ++v) best_[v] = domain_[v].min();
      return;
    }

    const ValueSet current = domain_[var];
    for (int value : kValueOrder) {
      if (!current.contains(value)) continue;
      ++branches_;
      const std::size_t mark = trail_.size();
      assign(var, ValueSet{value});
      for (std::size_t c : watchers_[var]) enqueue(c);
      if (propagate()) search();
      undo(mark);
    }
  }

  // Cost already committed: fixed variables plus variables that can no
  // longer be zero. Optionally raised per route by the caller's bounds once
  // the workshop is known.
  double lower_bound() const {
    const auto& vars = p_.variables();
    double total = 0.0;
    for (std::size_t v = 0; v < p_.num_x(); ++v) {
      if (!domain_[v].contains(0)) total += vars[v].cost;
    }
    const NodeId workshop = fixed_workshop();
    for (RouteKind k : kAllRoutes) {
      double route = 0.0;
      const std::size_t first = p_.y(k, LinkId(1));
      for (std::size_t v = first; v < first + p_.num_links(); ++v) {
        if (!domain_[v].contains(0)) route += vars[v].cost;
      }
      if (workshop.valid()) {
        if (auto it = options_.route_lower_bounds.find(workshop);
            it != options_.route_lower_bounds.end()) {
          route = std::max(route, it->second[route_index(k)]);
        }
      }
      total += route;
    }
    return total;
  }

  NodeId fixed_workshop() const {
    if (options_.route_lower_bounds.empty()) return {};
    for (std::size_t v = 0; v < p_.num_x(); ++v) {
      if (domain_[v].fixed() && domain_[v].min() == 1) return p_.variables()[v].workshop;
    }
    return {};
  }

  void enqueue(std::size_t c) {
    if (!queued_[c]) {
      queued_[c] = true;
      queue_.push_back(c);
    }
  }

  void assign(std::size_t var, ValueSet d) {
    trail_.push_back({var, domain_[var]});
    domain_[var] = d;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      domain_[trail_.back().var] = trail_.back().previous;
      trail_.pop_back();
    }
  }

  bool propagate() {
    bool ok = true;
    while (ok && !queue_.empty()) {
      std::size_t c = queue_.front();
      queue_.pop_front();
      queued_[c] = false;
      ok = revise(p_.constraints()[c]);
    }
    for (std::size_t c : queue_) queued_[c] = false;
    queue_.clear();
    return ok;
  }

  bool revise(const LinearConstraint& c) {
    int lo = 0;
    int hi = 0;
    for (const Term& t : c.terms) {
      const ValueSet d = domain_[t.var];
      int a = t.coef * d.min();
      int b = t.coef * d.max();
      lo += std::min(a, b);
      hi += std::max(a, b);
    }
    if (c.rhs < lo || c.rhs > hi) return false;

    for (const Term& t : c.terms) {
      const ValueSet d = domain_[t.var];
      if (d.fixed()) continue;
      int a = t.coef * d.min();
      int b = t.coef * d.max();
      const int others_lo = lo - std::min(a, b);
      const int others_hi = hi - std::max(a, b);
      ValueSet next = d;
      for (int value : {-1, 0, 1}) {
        if (!d.contains(value)) continue;
        const int need = c.rhs - t.coef * value;
        if (need < others_lo || need > others_hi) next.remove(value);
      }
      if (next == d) continue;
      if (next.empty()) return false;
      assign(t.var, next);
      for (std::size_t other : watchers_[t.var]) enqueue(other);
      // The range sums changed; recompute on the next visit.
      return true;
    }
    return true;
  }

  struct TrailEntry {
    std::size_t var;
    ValueSet previous;
  };

  const IntegerProgram& p_;
  const MipOptions& options_;
  std::vector<ValueSet> domain_;
  std::vector<std::vector<std::size_t>> watchers_;
  std::vector<TrailEntry> trail_;
  std::deque<std::size_t> queue_;
  std::vector<bool> queued_;

  double incumbent_ = kInfinity;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  std::uint64_t branches_ = 0;
};

}  // namespace

MipSolution solve_exact(const IntegerProgram& program, const MipOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<MipSolution> result = BranchAndBound(program, options).run();
  if (!result) {
    throw Error(ErrorCode::Infeasible, "no assignment satisfies the constraints");
  }
  result->stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return *result;
}

}  // namespace reroute
