#ifndef CSMABOUND_PLANNER_HPP_
#define CSMABOUND_PLANNER_HPP_

#include <optional>
#include <span>
#include <vector>

#include "csmabound/bounds.hpp"

namespace csmabound {

struct FlowSpec {
  NodePosition source;
  NodePosition sink;

  double length() const;  // > 0 required by the planner
};

// Intermediate relay robots for one flow: ceil(length / d_max) - 1. The flow
// endpoints are static infrastructure and are not counted.
long robots_for_flow(double length, double d_max);

struct BoundComparisonRow {
  double sir_th_db = 0.0;
  std::optional<double> dmax_dense_m;
  std::optional<double> dmax_flow_m;
  std::optional<long> robots_dense;
  std::optional<long> robots_flow;
  std::optional<double> saving_fraction;
};

// Per-threshold comparison of the generic dense bound against the
// flow-structured bound for m_flows flows: d_max under each, relay counts for
// path_length, and the relative saving. The dense bound is valid for any node
// configuration, so the flow d_max is never taken below the dense one (for
// many flows the dense bound becomes the binding one). Infeasible thresholds
// yield rows with empty optionals.
std::vector<BoundComparisonRow> compare_bounds(
    const RadioEnvironment& env, std::span<const double> sir_th_grid,
    double gamma, double path_length, int m_flows,
    std::span<const double> d_grid, RngStream& rng, std::size_t n,
    std::optional<int> n_max_override = {}, unsigned threads = 0);

struct DeploymentPlanEntry {
  FlowSpec flow;
  double d_max = 0.0;
  long robots = 0;
};

struct DeploymentPlan {
  std::vector<DeploymentPlanEntry> per_flow;
  long total = 0;
  double d_max = 0.0;
};

// Plans relay counts for a set of concurrent flows: one Flow(|flows|) d_max,
// applied per flow. Throws when no grid distance meets the outage target,
// naming the binding constraint.
DeploymentPlan plan_deployment(std::span<const FlowSpec> flows,
                               const RadioEnvironment& env, double sir_th_db,
                               double gamma, std::span<const double> d_grid,
                               RngStream& rng, std::size_t n,
                               std::optional<int> n_max_override = {},
                               unsigned threads = 0);

}  // namespace csmabound

#endif  // CSMABOUND_PLANNER_HPP_
