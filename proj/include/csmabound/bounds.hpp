#ifndef CSMABOUND_BOUNDS_HPP_
#define CSMABOUND_BOUNDS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csmabound/geometry.hpp"
#include "csmabound/rng.hpp"
#include "csmabound/stats.hpp"

namespace csmabound {

// Which worst-case cover family bounds the network: the generic dense
// hexagonal pair, or the flow-structured pair for m_flows concurrent flows.
struct Scenario {
  enum class Kind { kDense, kFlow };

  Kind kind = Kind::kDense;
  int m_flows = 1;

  static Scenario dense() { return {Kind::kDense, 1}; }
  static Scenario flow(int m_flows);

  std::string name() const;
};

// The cover pair evaluated for one scenario at one receiver distance, with
// the correction factor already resolved. n_max is the override when given,
// otherwise the largest cardinality among the scenario's own covers; zeta
// inflates every cover to dominate covers of up to n_max nodes.
struct ScenarioCovers {
  std::vector<InterferenceSetCover> covers;
  int n_max = 0;
  double zeta = 1.0;
};

ScenarioCovers scenario_covers(const RadioEnvironment& env,
                               const Scenario& scenario,
                               double receiver_distance,
                               std::optional<int> n_max_override = {});

// max(1, n_max / cover_size).
double correction_factor(std::size_t cover_size, std::size_t n_max);

// zeta * sum over nodes of p_t * (node-to-receiver distance)^-eta, receiver
// at (d, 0). Requires 0 < d < d1.
double interference_no_fading(double d, const InterferenceSetCover& cover,
                              double zeta);

// n independent draws of the faded interference sum, one psi per node per
// draw.
std::vector<double> sample_interference(double d,
                                        const InterferenceSetCover& cover,
                                        double zeta, RngStream& rng,
                                        std::size_t n);

// Worst-case SIR samples in dB. Per draw: one shared signal sample, one
// interference draw per cover (each cover's fading stream is derived from its
// node content, so identical covers fade identically), keep the minimum SIR
// across covers. Also reports the mean of the kept (maximum) interference.
struct SirSampleBatch {
  std::vector<double> sir_db;
  double kept_interference_mean = 0.0;
};

SirSampleBatch sample_sir_batch(double d,
                                std::span<const InterferenceSetCover> covers,
                                double zeta, RngStream& rng, std::size_t n);

SirDistribution sample_sir(double d,
                           std::span<const InterferenceSetCover> covers,
                           double zeta, RngStream& rng, std::size_t n);

struct BoundCurvePoint {
  double d = 0.0;
  double zeta = 1.0;
  double interference_mean = 0.0;  // linear, kept (max-over-covers) draws
  SirDistribution sir;
};

struct BoundCurve {
  RadioEnvironment env;
  Scenario scenario;
  std::vector<std::string> cover_labels;
  std::vector<BoundCurvePoint> points;
};

// Inclusive grid {lo, lo+step, ...} up to hi (within rounding).
std::vector<double> make_grid(double lo, double hi, double step);

// Distance-dependent bound curve over a strictly increasing grid in (0, d1).
// Grid points are independent derived streams, so results do not depend on
// evaluation order or thread count.
BoundCurve bound_curve(const RadioEnvironment& env, const Scenario& scenario,
                       std::span<const double> d_grid, RngStream& rng,
                       std::size_t n,
                       std::optional<int> n_max_override = {},
                       unsigned threads = 0);

// Largest grid distance whose empirical outage P(SIR < sir_th) stays below
// gamma; nullopt when no grid point qualifies. gamma must be in (0, 0.5].
std::optional<double> select_dmax(const BoundCurve& curve, double sir_th_db,
                                  double gamma);

// Empirical outage per grid point at the given threshold.
std::vector<double> outage_curve(const BoundCurve& curve, double sir_th_db);

// False when the outage curve decreases anywhere as d grows smaller, i.e.
// Gamma(d) is not monotone; surfaced as a warning by the CLI.
bool outage_monotone(const BoundCurve& curve, double sir_th_db);

}  // namespace csmabound

#endif  // CSMABOUND_BOUNDS_HPP_
