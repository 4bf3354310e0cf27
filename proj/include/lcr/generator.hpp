#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lcr/instance.hpp"

namespace lcr {

// Latent variables of the procedural CVRPTW generator. Spatial layout is a
// mixture of clustered / uniform / banded corridor / outlier components;
// time windows are placed by phase variables between per-node feasibility
// bounds. All sampling is deterministic given rng_seed.
struct GeneratorLatents {
  double spatial_scale_S = 100.0;
  double horizon_ratio_H = 4.0;
  double service_ratio_nu = 0.1;
  double time_coef_alpha = 1.0;
  int k_clusters = 3;
  std::array<double, 4> pi_space{0.4, 0.3, 0.2, 0.1};   // cluster, uniform, band, outlier
  std::array<double, 3> pi_width{0.3, 0.4, 0.3};        // narrow, medium, loose
  std::array<double, 4> pi_phase{0.25, 0.25, 0.25, 0.25};  // cluster, radial, angular, rand
  double r_con = 0.6;
  double sigma_p = 0.05;
  double w_min = 0.0;  // 0 -> defaulted to 0.02 * Tmax
  std::uint64_t rng_seed = 0;

  double tmax() const { return horizon_ratio_H * spatial_scale_S; }
  double service_time() const { return service_ratio_nu * spatial_scale_S; }
  double w_min_effective() const { return w_min > 0.0 ? w_min : 0.02 * tmax(); }

  // Throws std::invalid_argument on malformed latents.
  void check() const;

  // Draws latents from the artifact's hyperpriors.
  static GeneratorLatents sample(std::uint64_t seed);
};

class GeneratorError : public std::runtime_error {
 public:
  explicit GeneratorError(const std::string& msg) : std::runtime_error(msg) {}
};

RoutingInstance generate_cvrptw(const GeneratorLatents& latents, int n_customers);

// Uniform-square instances for the simpler tasks (standard NCO setup).
RoutingInstance generate_uniform_tsp(int n_customers, std::uint64_t seed);
RoutingInstance generate_uniform_cvrp(int n_customers, std::uint64_t seed);

}  // namespace lcr
