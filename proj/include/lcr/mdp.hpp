#pragma once

#include <string>
#include <vector>

#include "lcr/instance.hpp"

namespace lcr {

constexpr int kDepot = 0;

struct StepRecord {
  int node = 0;
  double arrival = 0.0;
  double wait = 0.0;
  double service_start = 0.0;
  double departure = 0.0;
};

// Mutable per-rollout construction state. One action at a time: a customer
// visit, or a depot return that starts a fresh route (CVRP/CVRPTW).
struct ConstructionState {
  const RoutingInstance* instance = nullptr;
  int current_node = kDepot;
  double current_time = 0.0;
  double remaining_capacity = 0.0;
  std::vector<bool> visited;  // indexed by node id; depot marked at init
  std::vector<StepRecord> route_log;
  int step_index = 0;
  int served_since_depot = 0;
  int customers_left = 0;
  double total_distance = 0.0;

  bool is_terminal() const;
};

struct ActionMask {
  std::vector<bool> feasible;          // indexed by node id, slot 0 = depot
  std::vector<int> feasible_customers;  // F_t, ascending node ids

  bool depot_feasible() const { return feasible[kDepot]; }
  std::vector<int> actions() const;  // F_t plus depot when feasible
};

struct RouteTimingEntry {
  int node = 0;
  double arrival = 0.0;
  double wait = 0.0;
  double service_start = 0.0;
  double departure = 0.0;
};

struct Solution {
  // Node sequence starting and ending at the depot, with intermediate
  // depot visits marking route breaks.
  std::vector<int> sequence;
  double total_distance = 0.0;
  std::vector<double> route_loads;
  std::vector<RouteTimingEntry> trace;  // CVRPTW timing per customer visit

  std::vector<std::vector<int>> routes() const;
};

struct VerificationReport {
  std::vector<std::string> violations;
  double replayed_distance = 0.0;
  bool ok() const { return violations.empty(); }
};

ConstructionState initial_state(const RoutingInstance& inst);

// Feasibility mask for the current step. Throws std::logic_error when
// queried on a terminal state or when a non-terminal state has no
// feasible action (invalid instance).
ActionMask feasible_actions(const ConstructionState& state);

// Deterministic transition; throws std::logic_error on infeasible actions.
ConstructionState apply_action(const ConstructionState& state, int action);

bool is_action_feasible(const ConstructionState& state, int action);

// Builds the final Solution from a finished construction.
Solution finish_solution(const ConstructionState& state);

// Rebuilds a Solution by replaying a node sequence (depot-delimited).
// Does not check feasibility; pair with verify_solution.
Solution solution_from_sequence(const RoutingInstance& inst, const std::vector<int>& seq);

double solution_cost(const Solution& sol, const RoutingInstance& inst);

// Sum of per-leg distances with each leg truncated to one decimal, the
// classical Solomon benchmark convention used by the reference tables.
double solution_cost_truncated(const Solution& sol, const RoutingInstance& inst);

// Independent replay of the route; checks coverage, capacity, time
// windows, and horizon. Reports, never throws.
VerificationReport verify_solution(const Solution& sol, const RoutingInstance& inst);

std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text, const RoutingInstance& inst);

}  // namespace lcr
