#pragma once

#include <stdexcept>
#include <string>

#include "lcr/instance.hpp"

namespace lcr {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solomon/Homberger VRPTW layout: a VEHICLE section with count and
// capacity, then a CUSTOMER section with rows
//   id x y demand ready_time due_date service_time
// Row id 0 is the depot; its due date is the horizon.
RoutingInstance parse_solomon(const std::string& text);

// TSPLIB documents restricted to EDGE_WEIGHT_TYPE EUC_2D.
RoutingInstance parse_tsplib(const std::string& text);

// TSPLIB .tour file; returns 0-based node ids in tour order.
std::vector<int> parse_tsplib_tour(const std::string& text);

}  // namespace lcr
