#include "csmabound/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "csmabound/rng.hpp"

namespace csmabound {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

// floor() with a relative nudge so that ratios that are integers up to
// floating-point noise (e.g. (0.9-0.3)/0.3) land on the integer.
long nudged_floor(double x) {
  return static_cast<long>(
      std::floor(x + 1e-9 * std::max(1.0, std::fabs(x))));
}

double annulus_tolerance(const RadioEnvironment& env) { return 1e-9 * env.d1; }

void append_clipped(std::vector<NodePosition>& nodes, double x, double y,
                    const RadioEnvironment& env) {
  const double r = std::hypot(x, y);
  const double tol = annulus_tolerance(env);
  // The annulus invariant wins over the raw table formulas: row-end nodes of
  // odd rows can land beyond d2 for non-integer d2/d1 ratios.
  if (r >= env.d1 - tol && r <= env.d2 + tol) {
    nodes.push_back({x, y});
  }
}

// One lattice row of configuration 1 at height sign*(sqrt(3)/2)*k*d1,
// clipped to the annulus. Odd rows are offset by half a lattice spacing.
void append_config1_row(std::vector<NodePosition>& nodes, int k, int sign,
                        const RadioEnvironment& env) {
  const double d1 = env.d1;
  const double radicand = env.d2 * env.d2 - 0.75 * k * k * d1 * d1;
  if (radicand < 0.0) return;
  const long nk = nudged_floor(std::sqrt(radicand) / d1);
  if (nk < 0) return;
  const double y = sign * (kSqrt3 / 2.0) * k * d1;
  if (k % 2 == 1) {
    for (long j = 0; j <= nk; ++j) {
      const double x = (1.0 + 2.0 * j) * d1 / 2.0;
      append_clipped(nodes, x, y, env);
      append_clipped(nodes, -x, y, env);
    }
  } else {
    append_clipped(nodes, 0.0, y, env);
    for (long j = 1; j <= nk; ++j) {
      append_clipped(nodes, j * d1, y, env);
      append_clipped(nodes, -j * d1, y, env);
    }
  }
}

long config1_row_count(const RadioEnvironment& env) {
  return nudged_floor(2.0 * env.d2 / (kSqrt3 * env.d1));
}

std::vector<NodePosition> intraflow_nodes(const RadioEnvironment& env) {
  std::vector<NodePosition> nodes;
  const long jmax = nudged_floor((env.d2 - env.d1) / env.d1) + 1;
  for (long j = 1; j <= jmax; ++j) {
    append_clipped(nodes, j * env.d1, 0.0, env);
    append_clipped(nodes, -j * env.d1, 0.0, env);
  }
  return nodes;
}

struct WLine {
  double x;                         // signed line offset (2k+1)*d1/2
  std::vector<NodePosition> nodes;  // clipped node positions
};

// Vertical interfering-flow lines l_{W,k} / l'_{W,k}; nodes start at
// |y| = (sqrt(3)/2)*d1 and step by d1. Lines are generated while non-empty.
std::vector<WLine> w_lines(const RadioEnvironment& env) {
  std::vector<WLine> lines;
  const double d1 = env.d1;
  for (int k = 0;; ++k) {
    const double x = (2.0 * k + 1.0) * d1 / 2.0;
    const double radicand = env.d2 * env.d2 - x * x;
    if (radicand < 0.0) break;
    const long nwk =
        nudged_floor((std::sqrt(radicand) - (kSqrt3 / 2.0) * d1) / d1);
    if (nwk < 0) break;
    for (const double sx : {x, -x}) {
      WLine line{sx, {}};
      for (long j = 0; j <= nwk; ++j) {
        const double y = (kSqrt3 / 2.0) * d1 + j * d1;
        append_clipped(line.nodes, sx, y, env);
        append_clipped(line.nodes, sx, -y, env);
      }
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

void require_m_flows(int m_flows) {
  if (m_flows < 1) {
    throw std::invalid_argument("m_flows must be >= 1");
  }
}

}  // namespace

RadioEnvironment::RadioEnvironment(double p_t_in, double eta_in,
                                   double sigma_db_in, double d1_in,
                                   double d2_in)
    : p_t(p_t_in), eta(eta_in), sigma_db(sigma_db_in), d1(d1_in), d2(d2_in) {
  if (!(p_t > 0.0)) throw std::invalid_argument("p_t must be > 0");
  if (!(eta >= 2.0 && eta <= 6.0)) {
    throw std::invalid_argument("eta must be in [2, 6]");
  }
  if (!(sigma_db >= 0.0)) throw std::invalid_argument("sigma_db must be >= 0");
  if (!(d1 > 0.0 && d2 > d1)) {
    throw std::invalid_argument("require 0 < d1 < d2");
  }
}

double distance(const NodePosition& a, const NodePosition& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::string_view to_string(CoverLabel label) {
  switch (label) {
    case CoverLabel::kConfig1: return "Config1";
    case CoverLabel::kConfig2: return "Config2";
    case CoverLabel::kIntraFlow: return "IntraFlow";
    case CoverLabel::kInterFlowClass1: return "InterFlowClass1";
    case CoverLabel::kInterFlowClass2: return "InterFlowClass2";
    case CoverLabel::kRandom: return "Random";
  }
  return "Unknown";
}

std::uint64_t InterferenceSetCover::content_hash() const {
  std::uint64_t h = 0x8c5bbcbfcafe1735ull;
  for (const auto& node : nodes) {
    h = mix64(h ^ std::bit_cast<std::uint64_t>(node.x));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(node.y));
  }
  return h;
}

std::string CoverViolation::describe() const {
  char buf[128];
  if (kind == Kind::kOutsideAnnulus) {
    std::snprintf(buf, sizeof(buf),
                  "node %zu at radius %.9g outside annulus", first, measured);
  } else {
    std::snprintf(buf, sizeof(buf),
                  "nodes %zu and %zu only %.9g apart", first, second,
                  measured);
  }
  return buf;
}

InterferenceSetCover build_config1(const RadioEnvironment& env) {
  std::vector<NodePosition> nodes = intraflow_nodes(env);  // l_0
  const long kmax = config1_row_count(env);
  for (int k = 1; k <= kmax; ++k) {
    append_config1_row(nodes, k, +1, env);
    append_config1_row(nodes, k, -1, env);
  }
  return {CoverLabel::kConfig1, env, std::move(nodes)};
}

InterferenceSetCover build_config2(const RadioEnvironment& env) {
  InterferenceSetCover cover = build_config1(env);
  for (auto& node : cover.nodes) {
    std::swap(node.x, node.y);
  }
  cover.label = CoverLabel::kConfig2;
  return cover;
}

InterferenceSetCover build_intraflow(const RadioEnvironment& env) {
  return {CoverLabel::kIntraFlow, env, intraflow_nodes(env)};
}

InterferenceSetCover build_interflow_class1(const RadioEnvironment& env,
                                            int m_flows) {
  require_m_flows(m_flows);
  std::vector<NodePosition> nodes = intraflow_nodes(env);
  const long kmax = config1_row_count(env);
  const long m_prime = std::min<long>(m_flows - 1, 2 * kmax);
  long added = 0;
  for (int k = 1; k <= kmax && added < m_prime; ++k) {
    for (int sign : {+1, -1}) {
      if (added >= m_prime) break;
      append_config1_row(nodes, k, sign, env);
      ++added;
    }
  }
  return {CoverLabel::kInterFlowClass1, env, std::move(nodes)};
}

InterferenceSetCover build_interflow_class2(const RadioEnvironment& env,
                                            int m_flows,
                                            double receiver_distance) {
  require_m_flows(m_flows);
  std::vector<WLine> lines = w_lines(env);
  const double seed_y = (kSqrt3 / 2.0) * env.d1;
  const NodePosition receiver{receiver_distance, 0.0};
  std::stable_sort(lines.begin(), lines.end(),
                   [&](const WLine& a, const WLine& b) {
                     const double da =
                         distance({a.x, seed_y}, receiver);
                     const double db =
                         distance({b.x, seed_y}, receiver);
                     if (da != db) return da < db;
                     if (std::fabs(a.x) != std::fabs(b.x)) {
                       return std::fabs(a.x) < std::fabs(b.x);
                     }
                     return a.x > b.x;  // positive offset first
                   });
  std::vector<NodePosition> nodes = intraflow_nodes(env);
  const std::size_t m_prime =
      std::min<std::size_t>(m_flows - 1, lines.size());
  for (std::size_t i = 0; i < m_prime; ++i) {
    nodes.insert(nodes.end(), lines[i].nodes.begin(), lines[i].nodes.end());
  }
  return {CoverLabel::kInterFlowClass2, env, std::move(nodes)};
}

std::vector<CoverViolation> validate_cover(const InterferenceSetCover& cover) {
  std::vector<CoverViolation> violations;
  const double tol = annulus_tolerance(cover.env);
  const double d1 = cover.env.d1;
  for (std::size_t i = 0; i < cover.nodes.size(); ++i) {
    const double r = std::hypot(cover.nodes[i].x, cover.nodes[i].y);
    if (r < d1 - tol || r > cover.env.d2 + tol) {
      violations.push_back(
          {CoverViolation::Kind::kOutsideAnnulus, i, 0, r});
    }
    for (std::size_t j = i + 1; j < cover.nodes.size(); ++j) {
      const double d = distance(cover.nodes[i], cover.nodes[j]);
      if (d < d1 - tol) {
        violations.push_back(
            {CoverViolation::Kind::kPairTooClose, i, j, d});
      }
    }
  }
  return violations;
}

int max_interferer_count(const RadioEnvironment& env,
                         std::optional<int> override_count) {
  if (override_count) {
    if (*override_count < 1) {
      throw std::invalid_argument("interferer-count override must be >= 1");
    }
    return *override_count;
  }
  const auto c1 = build_config1(env);
  const auto c2 = build_config2(env);
  return static_cast<int>(std::max(c1.nodes.size(), c2.nodes.size()));
}

double chord_length(double d_r, const RadioEnvironment& env) {
  if (!(d_r >= 0.0 && d_r < env.d1)) {
    throw std::invalid_argument("chord offset must satisfy 0 <= d_r < d1");
  }
  return std::sqrt(env.d2 * env.d2 - d_r * d_r) -
         std::sqrt(env.d1 * env.d1 - d_r * d_r);
}

}  // namespace csmabound
