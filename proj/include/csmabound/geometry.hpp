#ifndef CSMABOUND_GEOMETRY_HPP_
#define CSMABOUND_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csmabound {

// Physical radio parameters of the CSMA disk model. All powers are linear,
// sigma_db is the shadow-fading standard deviation in dB, d1 is the
// contention-region radius and d2 the transition-region outer radius.
struct RadioEnvironment {
  RadioEnvironment(double p_t, double eta, double sigma_db, double d1,
                   double d2);

  double p_t;
  double eta;
  double sigma_db;
  double d1;
  double d2;
};

struct NodePosition {
  double x = 0.0;
  double y = 0.0;
};

double distance(const NodePosition& a, const NodePosition& b);

enum class CoverLabel {
  kConfig1,
  kConfig2,
  kIntraFlow,
  kInterFlowClass1,
  kInterFlowClass2,
  kRandom,
};

std::string_view to_string(CoverLabel label);

// A set of simultaneous-interferer positions: every node in the closed
// annulus [d1, d2] around the transmitter at the origin, every pair of nodes
// at least d1 apart.
struct InterferenceSetCover {
  CoverLabel label;
  RadioEnvironment env;
  std::vector<NodePosition> nodes;

  // Hash of the node list only; equal node lists hash equal regardless of
  // label, which is what ties fading streams to cover content.
  std::uint64_t content_hash() const;
};

struct CoverViolation {
  enum class Kind { kOutsideAnnulus, kPairTooClose };

  Kind kind;
  std::size_t first = 0;
  std::size_t second = 0;  // meaningful for kPairTooClose only
  double measured = 0.0;

  std::string describe() const;
};

// Worst-case hexagonal-packing cover whose closest interferer sits on the
// inner annulus boundary along the transmitter-receiver axis.
InterferenceSetCover build_config1(const RadioEnvironment& env);

// The coordinate-swapped lattice whose two closest interferers are d1 from
// the transmitter and from each other.
InterferenceSetCover build_config2(const RadioEnvironment& env);

// Worst-case interferers of the transmitter's own flow line (the l_0 axis).
InterferenceSetCover build_intraflow(const RadioEnvironment& env);

// Intra-flow cover plus the first min(m_flows-1, 2K) off-axis lattice rows of
// config-1, ordered {l_1, l'_1, l_2, l'_2, ...}.
InterferenceSetCover build_interflow_class1(const RadioEnvironment& env,
                                            int m_flows);

// Intra-flow cover plus the first min(m_flows-1, count) vertical interfering
// flow lines, pairs ordered by seed-node distance to the receiver at
// (receiver_distance, 0); ties prefer smaller |x|, then positive x.
InterferenceSetCover build_interflow_class2(const RadioEnvironment& env,
                                            int m_flows,
                                            double receiver_distance = 0.0);

// Empty result iff the cover satisfies the annulus and pairwise-distance
// constraints within a relative tolerance of 1e-9 * d1.
std::vector<CoverViolation> validate_cover(const InterferenceSetCover& cover);

// Maximum simultaneous-interferer count: the supplied override, otherwise the
// hexagonal-packing estimate max(|config1|, |config2|).
int max_interferer_count(const RadioEnvironment& env,
                         std::optional<int> override_count = std::nullopt);

// Half-chord extent sqrt(d2^2 - d_r^2) - sqrt(d1^2 - d_r^2) of the annulus at
// perpendicular offset d_r from the center; strictly increasing on [0, d1).
double chord_length(double d_r, const RadioEnvironment& env);

}  // namespace csmabound

#endif  // CSMABOUND_GEOMETRY_HPP_
