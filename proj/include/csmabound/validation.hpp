#ifndef CSMABOUND_VALIDATION_HPP_
#define CSMABOUND_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "csmabound/bounds.hpp"

namespace csmabound {

struct Segment {
  NodePosition a;
  NodePosition b;
};

// Uniform scatter over the annulus [d1, d2]; the point count is Poisson with
// mean density * annulus area.
std::vector<NodePosition> dense_candidates(const RadioEnvironment& env,
                                           double density_per_m2,
                                           RngStream& rng);

// Evenly spaced points along each segment, clipped to the annulus (a chord
// crossing the contention disk yields two sub-segments). Callers include the
// transmitter's own flow line for intra-flow interference.
std::vector<NodePosition> flow_candidates(const RadioEnvironment& env,
                                          std::span<const Segment> segments,
                                          double points_per_meter);

// Sequential inhibition: repeatedly pick a uniform remaining candidate,
// select it, discard everything strictly within d1 of it. The result is a
// valid cover and maximal (every discarded candidate is within d1 of a
// selected node).
InterferenceSetCover generate_random_cover(const RadioEnvironment& env,
                                           std::vector<NodePosition>
                                               candidates,
                                           RngStream& rng);

struct ValidationOptions {
  // Candidate density for the dense scenario; <= 0 picks the default of an
  // expected 1000 candidates in the annulus.
  double candidate_density = 0.0;
  double points_per_meter = 10.0;  // flow-scenario candidate spacing
  std::size_t bound_samples = 50000;
  std::optional<int> n_max_override;
  unsigned threads = 0;
};

struct ValidationPoint {
  double d = 0.0;
  // Mean over trial covers of the per-cover empirical violation probability.
  double p_below_mean = 0.0;
  double p_below_mean_minus_std = 0.0;
  double p_below_ratio_of_means = 0.0;
  // Trials whose mean (no-fading) interference exceeded the scenario bound.
  long dominance_violations = 0;
};

struct ValidationReport {
  RadioEnvironment env;
  Scenario scenario;
  int trials = 0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<ValidationPoint> per_d;
};

// Measures how often randomly generated interferer sets beat the scenario
// bound. Per grid distance: the bound SIR distribution is sampled once
// (bound_samples draws, scenario covers with zeta); then `trials` random
// covers are generated (dense: uniform annulus candidates; flow: random flow
// chords with endpoints on the d2 circle plus the transmitter's own line) and
// each is sampled n_samples times with zeta = 1.
ValidationReport run_validation(const RadioEnvironment& env,
                                const Scenario& scenario,
                                std::span<const double> d_grid, int trials,
                                RngStream& rng, std::size_t n_samples,
                                const ValidationOptions& options = {});

}  // namespace csmabound

#endif  // CSMABOUND_VALIDATION_HPP_
