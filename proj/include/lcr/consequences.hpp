#pragma once

#include <string>
#include <vector>

#include "lcr/mdp.hpp"

namespace lcr {

// Per-step candidate feature matrix. Rows follow mask.feasible_customers;
// the depot, when selectable, contributes an implicit row with a zero
// absolute block and (after centering) -mu as its relative block.
//
// Relative feature layout:
//   CVRPTW: travel^, wait^, slack^, arrival^, departure^   (scaled by Tmax)
//   CVRP:   travel^, demand ratio, depot distance^          (scaled by diameter)
//   TSP:    travel^
// Absolute feature layout: one angle feature per task (depot angle for
// CVRP/CVRPTW, centroid angle for TSP).
struct ConsequenceTable {
  std::vector<int> customers;  // F_t node ids
  int rel_dim = 0;
  int abs_dim = 0;
  std::vector<double> x_rel;  // |F_t| x rel_dim, row-major
  std::vector<double> x_abs;  // |F_t| x abs_dim, row-major
  bool centered = false;
  std::vector<double> mu;             // rel_dim, feasible-customer mean
  std::vector<double> x_rel_centered;  // |F_t| x rel_dim

  int size() const { return static_cast<int>(customers.size()); }
  std::vector<double> depot_row_rel() const;  // -mu (zeros when uncentered)

  // Scoring vector [x_abs; x_rel or centered x_rel] for the row at
  // position i, or for the depot with i == size().
  std::vector<double> phi(int i, bool use_centered) const;
  int phi_dim() const { return abs_dim + rel_dim; }
};

// Feasible-set aggregates carried into context modulation:
//   CVRPTW: [rho, mean travel^, mean wait^, min slack^]
//   CVRP:   [rho, mean travel^, mean load-after, min load-after]
//   TSP:    [rho, mean travel^, 0, 0]
// Zero vector when F_t is empty.
struct StepSummary {
  std::array<double, 4> values{0.0, 0.0, 0.0, 0.0};
};

int relative_feature_dim(Task task);
int absolute_feature_dim(Task task);

ConsequenceTable candidate_features(const ConstructionState& state, const ActionMask& mask);
void center(ConsequenceTable& table);
StepSummary step_summary(const ConsequenceTable& table, const ConstructionState& state,
                         const ActionMask& mask);

// One CSV row per candidate: id, x_rel.., x_rel_centered.., x_abs.., mu..
std::string table_to_csv(const ConsequenceTable& table);

}  // namespace lcr
