#include "csmabound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "csmabound/channel.hpp"
#include "csmabound/parallel.hpp"

namespace csmabound {
namespace {

constexpr std::uint64_t kSaltSignal = 0x5349474eull;

void require_receiver_distance(double d, const RadioEnvironment& env) {
  if (!(d > 0.0 && d < env.d1)) {
    throw std::invalid_argument(
        "receiver distance must lie in (0, d1): the receiver stays inside "
        "the transmitter's contention region");
  }
}

std::vector<double> mean_powers(double d, const InterferenceSetCover& cover) {
  std::vector<double> mp;
  mp.reserve(cover.nodes.size());
  for (const auto& node : cover.nodes) {
    const double dist = std::hypot(node.x - d, node.y);
    mp.push_back(cover.env.p_t * std::pow(dist, -cover.env.eta));
  }
  return mp;
}

// Fills one column of faded interference sums for a cover, consuming the
// cover's own content-derived stream.
void fill_interference(double d, const InterferenceSetCover& cover,
                       double zeta, const RngStream& root, std::size_t n,
                       std::vector<double>& out) {
  out.assign(n, 0.0);
  if (cover.nodes.empty()) return;
  const std::vector<double> mp = mean_powers(d, cover);
  const double sigma = cover.env.sigma_db;
  if (sigma == 0.0) {
    double total = 0.0;
    for (double m : mp) total += m;
    std::fill(out.begin(), out.end(), zeta * total);
    return;
  }
  RngStream stream = root.derive(cover.content_hash());
  const double scale = fading_log_scale(sigma);
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (double m : mp) {
      total += m * std::exp(scale * stream.normal());
    }
    out[i] = zeta * total;
  }
}

}  // namespace

Scenario Scenario::flow(int m_flows) {
  if (m_flows < 1) throw std::invalid_argument("m_flows must be >= 1");
  return {Kind::kFlow, m_flows};
}

std::string Scenario::name() const {
  if (kind == Kind::kDense) return "dense";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "flow(%d)", m_flows);
  return buf;
}

ScenarioCovers scenario_covers(const RadioEnvironment& env,
                               const Scenario& scenario,
                               double receiver_distance,
                               std::optional<int> n_max_override) {
  ScenarioCovers out;
  if (scenario.kind == Scenario::Kind::kDense) {
    out.covers.push_back(build_config1(env));
    out.covers.push_back(build_config2(env));
  } else {
    out.covers.push_back(build_interflow_class1(env, scenario.m_flows));
    out.covers.push_back(
        build_interflow_class2(env, scenario.m_flows, receiver_distance));
  }
  std::size_t largest = 0;
  std::size_t smallest = out.covers.front().nodes.size();
  for (const auto& cover : out.covers) {
    largest = std::max(largest, cover.nodes.size());
    smallest = std::min(smallest, cover.nodes.size());
  }
  out.n_max = n_max_override ? *n_max_override : static_cast<int>(largest);
  if (out.n_max < 1) {
    throw std::invalid_argument("interferer-count override must be >= 1");
  }
  // One scenario-wide factor, sized so every cover dominates n_max nodes.
  out.zeta = correction_factor(smallest, static_cast<std::size_t>(out.n_max));
  return out;
}

double correction_factor(std::size_t cover_size, std::size_t n_max) {
  if (cover_size == 0 || n_max == 0) {
    throw std::invalid_argument("correction factor requires positive counts");
  }
  return std::max(1.0, static_cast<double>(n_max) /
                           static_cast<double>(cover_size));
}

double interference_no_fading(double d, const InterferenceSetCover& cover,
                              double zeta) {
  require_receiver_distance(d, cover.env);
  double total = 0.0;
  for (const auto& node : cover.nodes) {
    const double dist = std::hypot(node.x - d, node.y);
    total += cover.env.p_t * std::pow(dist, -cover.env.eta);
  }
  return zeta * total;
}

std::vector<double> sample_interference(double d,
                                        const InterferenceSetCover& cover,
                                        double zeta, RngStream& rng,
                                        std::size_t n) {
  require_receiver_distance(d, cover.env);
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
  const RngStream root = rng.spawn();
  std::vector<double> out;
  fill_interference(d, cover, zeta, root, n, out);
  return out;
}

SirSampleBatch sample_sir_batch(double d,
                                std::span<const InterferenceSetCover> covers,
                                double zeta, RngStream& rng, std::size_t n) {
  if (covers.empty()) {
    throw std::invalid_argument("sample_sir requires at least one cover");
  }
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
  const RadioEnvironment& env = covers.front().env;
  require_receiver_distance(d, env);
  bool any_nodes = false;
  for (const auto& cover : covers) any_nodes |= !cover.nodes.empty();
  if (!any_nodes) {
    throw std::invalid_argument(
        "all covers are empty: zero interference has no finite SIR in an "
        "interference-limited model");
  }

  const RngStream root = rng.spawn();
  std::vector<std::vector<double>> inter(covers.size());
  for (std::size_t c = 0; c < covers.size(); ++c) {
    fill_interference(d, covers[c], zeta, root, n, inter[c]);
  }

  const double signal_mean = mean_power(d, env);
  RngStream signal_stream = root.derive(kSaltSignal);
  const double scale = fading_log_scale(env.sigma_db);

  SirSampleBatch batch;
  batch.sir_db.resize(n);
  double kept_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double signal = signal_mean;
    if (env.sigma_db != 0.0) {
      signal *= std::exp(scale * signal_stream.normal());
    }
    double kept = 0.0;
    for (const auto& column : inter) {
      kept = std::max(kept, column[i]);
    }
    kept_sum += kept;
    batch.sir_db[i] = 10.0 * std::log10(signal / kept);
  }
  batch.kept_interference_mean = kept_sum / static_cast<double>(n);
  return batch;
}

SirDistribution sample_sir(double d,
                           std::span<const InterferenceSetCover> covers,
                           double zeta, RngStream& rng, std::size_t n) {
  return SirDistribution::from_samples(
      sample_sir_batch(d, covers, zeta, rng, n).sir_db);
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("grid requires step > 0 and hi >= lo");
  }
  const long count = static_cast<long>(
      std::floor((hi - lo) / step + 1e-9 * std::max(1.0, (hi - lo) / step)));
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (long i = 0; i <= count; ++i) {
    grid.push_back(lo + static_cast<double>(i) * step);
  }
  return grid;
}

BoundCurve bound_curve(const RadioEnvironment& env, const Scenario& scenario,
                       std::span<const double> d_grid, RngStream& rng,
                       std::size_t n, std::optional<int> n_max_override,
                       unsigned threads) {
  if (d_grid.empty()) throw std::invalid_argument("empty distance grid");
  for (std::size_t i = 0; i < d_grid.size(); ++i) {
    if (!(d_grid[i] > 0.0 && d_grid[i] < env.d1)) {
      throw std::invalid_argument("grid entries must lie in (0, d1)");
    }
    if (i > 0 && !(d_grid[i] > d_grid[i - 1])) {
      throw std::invalid_argument("grid must be strictly increasing");
    }
  }
  BoundCurve curve{env, scenario, {}, {}};
  {
    const ScenarioCovers sc =
        scenario_covers(env, scenario, d_grid.front(), n_max_override);
    for (const auto& cover : sc.covers) {
      curve.cover_labels.emplace_back(to_string(cover.label));
    }
  }
  curve.points.resize(d_grid.size());
  const RngStream root = rng.spawn();
  parallel_for(
      d_grid.size(),
      [&](std::size_t i) {
        const double d = d_grid[i];
        const ScenarioCovers sc =
            scenario_covers(env, scenario, d, n_max_override);
        RngStream stream = root.derive(i);
        SirSampleBatch batch =
            sample_sir_batch(d, sc.covers, sc.zeta, stream, n);
        curve.points[i] =
            BoundCurvePoint{d, sc.zeta, batch.kept_interference_mean,
                            SirDistribution::from_samples(
                                std::move(batch.sir_db))};
      },
      threads);
  return curve;
}

std::optional<double> select_dmax(const BoundCurve& curve, double sir_th_db,
                                  double gamma) {
  if (!(gamma > 0.0 && gamma <= 0.5)) {
    throw std::invalid_argument("gamma must be in (0, 0.5]");
  }
  for (auto it = curve.points.rbegin(); it != curve.points.rend(); ++it) {
    if (it->sir.prob_below(sir_th_db) < gamma) return it->d;
  }
  return std::nullopt;
}

std::vector<double> outage_curve(const BoundCurve& curve, double sir_th_db) {
  std::vector<double> out;
  out.reserve(curve.points.size());
  for (const auto& point : curve.points) {
    out.push_back(point.sir.prob_below(sir_th_db));
  }
  return out;
}

bool outage_monotone(const BoundCurve& curve, double sir_th_db) {
  const std::vector<double> gamma = outage_curve(curve, sir_th_db);
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    if (gamma[i] < gamma[i - 1]) return false;
  }
  return true;
}

}  // namespace csmabound
