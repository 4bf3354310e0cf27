#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcr/geometry.hpp"

namespace lcr {

enum class Task { TSP, CVRP, CVRPTW };

const char* task_name(Task t);
std::optional<Task> task_from_name(const std::string& name);

struct CustomerRecord {
  Vec2 position;
  double demand = 0.0;
  double window_open_e = 0.0;
  double window_close_l = 0.0;
  double service_time_s = 0.0;
};

// Immutable problem data. Node 0 is always the depot; customers are
// nodes 1..n in the order stored here.
struct RoutingInstance {
  Task task = Task::TSP;
  std::string name;
  Vec2 depot;
  std::vector<CustomerRecord> customers;
  double capacity = 0.0;              // CVRP / CVRPTW
  double horizon_tmax = 0.0;          // CVRPTW
  double time_per_distance = 1.0;     // CVRPTW travel-time coefficient
  double spatial_scale = 0.0;         // generator metadata, 0 if unknown
  DistanceRule distance_rule = DistanceRule::Exact;

  int num_customers() const { return static_cast<int>(customers.size()); }
  int num_nodes() const { return num_customers() + 1; }

  Vec2 position(int node) const { return node == 0 ? depot : customers[node - 1].position; }
  double demand(int node) const { return node == 0 ? 0.0 : customers[node - 1].demand; }

  double distance(int a, int b) const {
    return euc2d_distance(position(a), position(b), distance_rule);
  }
  double travel_time(int a, int b) const { return time_per_distance * distance(a, b); }

  // Largest pairwise node distance; used as the spatial feature scale.
  double diameter() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks structural invariants and, for CVRPTW, that every customer is
// reachable on a dedicated depot round trip. Reports, never throws.
ValidationReport validate_instance(const RoutingInstance& inst);

// Native JSON serialization. Field names are part of the format.
std::string to_native_json(const RoutingInstance& inst);
RoutingInstance from_native_json(const std::string& text);

RoutingInstance load_instance_file(const std::string& path);
void save_instance_file(const RoutingInstance& inst, const std::string& path);

}  // namespace lcr
