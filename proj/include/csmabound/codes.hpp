#ifndef CSMABOUND_CODES_HPP_
#define CSMABOUND_CODES_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "csmabound/bounds.hpp"

namespace csmabound {

struct CodeConfig {
  int n_codes = 1;  // orthogonal codes available
  int n_max = 1;    // max simultaneously active nodes, interferers + sender
};

// Code-conditioned SIR sampling. Per draw every node and the transmitter pick
// an independent uniform code; only interferers matching the transmitter's
// code contribute. Draws where no interferer matches anywhere are counted as
// interference-free and excluded from the SIR statistics (dB SIR is undefined
// at zero interference); interference means/stds are over all draws with
// zeros included, which is the quantity the expected-value bound scales.
struct CodedSirResult {
  std::optional<SirDistribution> sir;  // absent when every draw was free
  double interference_free_fraction = 0.0;
  double interference_mean = 0.0;
  double interference_std = 0.0;
  std::size_t draws = 0;
};

CodedSirResult sample_sir_with_codes(double d,
                                     std::span<const InterferenceSetCover>
                                         covers,
                                     double zeta, const CodeConfig& config,
                                     RngStream& rng, std::size_t n);

// Product lower bound on the probability of interference-free communication,
// prod_{i=1..n_max} (1 - (i-1)/n_codes). Requires n_codes >= n_max.
double interference_free_lower_bound(const CodeConfig& config);

// Smallest n_codes >= n_max whose lower bound reaches kappa in [0.5, 1).
int select_code_count(int n_max, double kappa);

}  // namespace csmabound

#endif  // CSMABOUND_CODES_HPP_
