#include "csmabound/planner.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace csmabound {

double FlowSpec::length() const { return distance(source, sink); }

long robots_for_flow(double length, double d_max) {
  if (!(length > 0.0)) throw std::invalid_argument("flow length must be > 0");
  if (!(d_max > 0.0)) throw std::invalid_argument("d_max must be > 0");
  const double hops = length / d_max;
  // Relative nudge keeps exact divisions (100/10) from rounding up.
  long links = static_cast<long>(
      std::ceil(hops - 1e-9 * std::max(1.0, hops)));
  if (links < 1) links = 1;
  return links - 1;
}

std::vector<BoundComparisonRow> compare_bounds(
    const RadioEnvironment& env, std::span<const double> sir_th_grid,
    double gamma, double path_length, int m_flows,
    std::span<const double> d_grid, RngStream& rng, std::size_t n,
    std::optional<int> n_max_override, unsigned threads) {
  if (sir_th_grid.empty()) {
    throw std::invalid_argument("sir_th_grid must be non-empty");
  }
  if (!(path_length > 0.0)) {
    throw std::invalid_argument("path_length must be > 0");
  }
  const BoundCurve dense = bound_curve(env, Scenario::dense(), d_grid, rng, n,
                                       n_max_override, threads);
  const BoundCurve flow = bound_curve(env, Scenario::flow(m_flows), d_grid,
                                      rng, n, /*n_max_override=*/std::nullopt,
                                      threads);
  std::vector<BoundComparisonRow> rows;
  rows.reserve(sir_th_grid.size());
  for (double th : sir_th_grid) {
    BoundComparisonRow row;
    row.sir_th_db = th;
    row.dmax_dense_m = select_dmax(dense, th, gamma);
    row.dmax_flow_m = select_dmax(flow, th, gamma);
    // The dense bound holds for flow networks too; never plan below it.
    if (row.dmax_dense_m &&
        (!row.dmax_flow_m || *row.dmax_flow_m < *row.dmax_dense_m)) {
      row.dmax_flow_m = row.dmax_dense_m;
    }
    if (row.dmax_dense_m) {
      row.robots_dense = robots_for_flow(path_length, *row.dmax_dense_m);
    }
    if (row.dmax_flow_m) {
      row.robots_flow = robots_for_flow(path_length, *row.dmax_flow_m);
    }
    if (row.robots_dense && row.robots_flow) {
      row.saving_fraction =
          *row.robots_dense > 0
              ? static_cast<double>(*row.robots_dense - *row.robots_flow) /
                    static_cast<double>(*row.robots_dense)
              : 0.0;
    }
    rows.push_back(row);
  }
  return rows;
}

DeploymentPlan plan_deployment(std::span<const FlowSpec> flows,
                               const RadioEnvironment& env, double sir_th_db,
                               double gamma, std::span<const double> d_grid,
                               RngStream& rng, std::size_t n,
                               std::optional<int> n_max_override,
                               unsigned threads) {
  if (flows.empty()) throw std::invalid_argument("flow list must be non-empty");
  const int m = static_cast<int>(flows.size());
  const BoundCurve curve = bound_curve(env, Scenario::flow(m), d_grid, rng, n,
                                       n_max_override, threads);
  const std::optional<double> d_max = select_dmax(curve, sir_th_db, gamma);
  if (!d_max) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "no grid distance satisfies P(SIR < %.9g dB) < %.9g for a "
                  "%d-flow network",
                  sir_th_db, gamma, m);
    throw std::runtime_error(msg);
  }
  DeploymentPlan plan;
  plan.d_max = *d_max;
  for (const auto& flow : flows) {
    const long robots = robots_for_flow(flow.length(), *d_max);
    plan.per_flow.push_back({flow, *d_max, robots});
    plan.total += robots;
  }
  return plan;
}

}  // namespace csmabound
