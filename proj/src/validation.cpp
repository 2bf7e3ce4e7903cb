#include "csmabound/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "csmabound/channel.hpp"
#include "csmabound/parallel.hpp"

namespace csmabound {
namespace {

constexpr std::uint64_t kSaltBound = 0xB0B0ull;
constexpr std::uint64_t kSaltTrial = 0x7A7Aull;
constexpr std::uint64_t kSaltEndpoints = 0xE9E9ull;

double annulus_area(const RadioEnvironment& env) {
  return std::numbers::pi * (env.d2 * env.d2 - env.d1 * env.d1);
}

// Poisson count via unit-exponential inter-arrival sums; exact and free of
// library-specific distribution algorithms.
std::size_t poisson_count(double lambda, RngStream& rng) {
  if (lambda <= 0.0) return 0;
  if (lambda > 1e7) {
    throw std::invalid_argument("candidate intensity too large");
  }
  std::size_t count = 0;
  double acc = -std::log(1.0 - rng.uniform());
  while (acc <= lambda) {
    ++count;
    acc += -std::log(1.0 - rng.uniform());
  }
  return count;
}

NodePosition uniform_annulus_point(const RadioEnvironment& env,
                                   RngStream& rng) {
  const double r = std::sqrt(env.d1 * env.d1 +
                             rng.uniform() *
                                 (env.d2 * env.d2 - env.d1 * env.d1));
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

struct Interval {
  double lo;
  double hi;
};

// Parameter sub-intervals of [0,1] where a + t*(b-a) lies inside the closed
// annulus: inside the d2 disk and outside the open d1 disk.
std::vector<Interval> clip_to_annulus(const Segment& seg,
                                      const RadioEnvironment& env) {
  const double ux = seg.b.x - seg.a.x;
  const double uy = seg.b.y - seg.a.y;
  const double qa = ux * ux + uy * uy;
  const double qb = 2.0 * (seg.a.x * ux + seg.a.y * uy);

  if (qa == 0.0) {  // degenerate segment
    const double r = std::hypot(seg.a.x, seg.a.y);
    if (r >= env.d1 && r <= env.d2) return {{0.0, 0.0}};
    return {};
  }

  // Roots of |p(t)|^2 = r^2; the quadratic opens upward, so |p| <= r holds
  // between the roots.
  const auto disk_interval = [&](double r) -> std::optional<Interval> {
    const double qc = seg.a.x * seg.a.x + seg.a.y * seg.a.y - r * r;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    return Interval{(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)};
  };

  std::optional<Interval> outer = disk_interval(env.d2);
  if (!outer) {
    // No intersection with the d2 circle: entirely inside or outside.
    if (std::hypot(seg.a.x, seg.a.y) > env.d2) return {};
    outer = Interval{0.0, 1.0};
  }
  Interval kept{std::max(outer->lo, 0.0), std::min(outer->hi, 1.0)};
  if (kept.lo > kept.hi) return {};

  std::vector<Interval> result;
  const std::optional<Interval> inner = disk_interval(env.d1);
  if (!inner || inner->hi <= kept.lo || inner->lo >= kept.hi) {
    result.push_back(kept);
  } else {
    if (inner->lo > kept.lo) result.push_back({kept.lo, inner->lo});
    if (inner->hi < kept.hi) result.push_back({inner->hi, kept.hi});
  }
  return result;
}

struct PointStats {
  double p_mean = 0.0;
  double p_mean_minus_std = 0.0;
  double p_ratio = 0.0;
  long dominance = 0;
};

}  // namespace

std::vector<NodePosition> dense_candidates(const RadioEnvironment& env,
                                           double density_per_m2,
                                           RngStream& rng) {
  if (!(density_per_m2 > 0.0)) {
    throw std::invalid_argument("candidate density must be > 0");
  }
  const std::size_t count =
      poisson_count(density_per_m2 * annulus_area(env), rng);
  std::vector<NodePosition> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(uniform_annulus_point(env, rng));
  }
  return points;
}

std::vector<NodePosition> flow_candidates(const RadioEnvironment& env,
                                          std::span<const Segment> segments,
                                          double points_per_meter) {
  if (!(points_per_meter > 0.0)) {
    throw std::invalid_argument("points_per_meter must be > 0");
  }
  std::vector<NodePosition> points;
  for (const auto& seg : segments) {
    const double ux = seg.b.x - seg.a.x;
    const double uy = seg.b.y - seg.a.y;
    const double seg_len = std::hypot(ux, uy);
    for (const Interval& iv : clip_to_annulus(seg, env)) {
      const double len = (iv.hi - iv.lo) * seg_len;
      const long steps =
          std::max<long>(1, static_cast<long>(std::ceil(
                                len * points_per_meter - 1e-9)));
      for (long i = 0; i <= steps; ++i) {
        const double t =
            iv.lo + (iv.hi - iv.lo) * static_cast<double>(i) /
                        static_cast<double>(steps);
        points.push_back({seg.a.x + t * ux, seg.a.y + t * uy});
      }
    }
  }
  return points;
}

InterferenceSetCover generate_random_cover(const RadioEnvironment& env,
                                           std::vector<NodePosition>
                                               candidates,
                                           RngStream& rng) {
  std::vector<NodePosition> selected;
  while (!candidates.empty()) {
    const std::size_t idx = rng.uniform_below(candidates.size());
    const NodePosition v = candidates[idx];
    selected.push_back(v);
    std::erase_if(candidates, [&](const NodePosition& p) {
      return distance(p, v) < env.d1;
    });
  }
  return {CoverLabel::kRandom, env, std::move(selected)};
}

ValidationReport run_validation(const RadioEnvironment& env,
                                const Scenario& scenario,
                                std::span<const double> d_grid, int trials,
                                RngStream& rng, std::size_t n_samples,
                                const ValidationOptions& options) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (n_samples == 0) throw std::invalid_argument("n_samples must be >= 1");
  for (std::size_t i = 0; i < d_grid.size(); ++i) {
    if (!(d_grid[i] > 0.0 && d_grid[i] < env.d1)) {
      throw std::invalid_argument("grid entries must lie in (0, d1)");
    }
    if (i > 0 && !(d_grid[i] > d_grid[i - 1])) {
      throw std::invalid_argument("grid must be strictly increasing");
    }
  }
  const double density = options.candidate_density > 0.0
                             ? options.candidate_density
                             : 1000.0 / annulus_area(env);

  ValidationReport report{env,       scenario, trials,
                          n_samples, rng.seed(), {}};
  report.per_d.resize(d_grid.size());
  const RngStream root = rng.spawn();
  const bool no_fading = env.sigma_db == 0.0;

  parallel_for(
      d_grid.size(),
      [&](std::size_t i) {
        const double d = d_grid[i];
        const RngStream point_root = root.derive(i);
        const ScenarioCovers sc =
            scenario_covers(env, scenario, d, options.n_max_override);

        double bound_nofade = 0.0;
        for (const auto& cover : sc.covers) {
          bound_nofade = std::max(
              bound_nofade, interference_no_fading(d, cover, sc.zeta));
        }
        const double ratio_db =
            to_db(mean_power(d, env)) - to_db(bound_nofade);

        RngStream bound_stream = point_root.derive(kSaltBound);
        const std::size_t n_bound =
            no_fading ? 1 : options.bound_samples;
        const SirDistribution bound = sample_sir(
            d, sc.covers, sc.zeta, bound_stream, n_bound);
        const double mu = bound.mean();
        const double mu_minus_std = mu - bound.std_dev();

        PointStats stats;
        for (int t = 0; t < trials; ++t) {
          RngStream trial_stream = point_root.derive(kSaltTrial, t);
          InterferenceSetCover cover{CoverLabel::kRandom, env, {}};
          if (scenario.kind == Scenario::Kind::kDense) {
            cover = generate_random_cover(
                env, dense_candidates(env, density, trial_stream),
                trial_stream);
          } else {
            std::vector<Segment> segments;
            segments.push_back({{-env.d2, 0.0}, {env.d2, 0.0}});
            RngStream ep = trial_stream.derive(kSaltEndpoints);
            for (int f = 1; f < scenario.m_flows; ++f) {
              const double th1 = 2.0 * std::numbers::pi * ep.uniform();
              const double th2 = 2.0 * std::numbers::pi * ep.uniform();
              segments.push_back(
                  {{env.d2 * std::cos(th1), env.d2 * std::sin(th1)},
                   {env.d2 * std::cos(th2), env.d2 * std::sin(th2)}});
            }
            cover = generate_random_cover(
                env,
                flow_candidates(env, segments, options.points_per_meter),
                trial_stream);
          }
          if (cover.nodes.empty()) continue;  // zero interference trial

          const double act_nofade = interference_no_fading(d, cover, 1.0);
          if (act_nofade > bound_nofade * (1.0 + 1e-12)) {
            ++stats.dominance;
          }
          if (no_fading) {
            const double sir = to_db(mean_power(d, env)) - to_db(act_nofade);
            stats.p_mean += sir < mu ? 1.0 : 0.0;
            stats.p_mean_minus_std += sir < mu_minus_std ? 1.0 : 0.0;
            stats.p_ratio += sir < ratio_db ? 1.0 : 0.0;
          } else {
            const std::vector<InterferenceSetCover> single{cover};
            const SirSampleBatch batch = sample_sir_batch(
                d, single, 1.0, trial_stream, n_samples);
            long below_mu = 0, below_ms = 0, below_ratio = 0;
            for (double sir : batch.sir_db) {
              below_mu += sir < mu;
              below_ms += sir < mu_minus_std;
              below_ratio += sir < ratio_db;
            }
            const double inv = 1.0 / static_cast<double>(batch.sir_db.size());
            stats.p_mean += below_mu * inv;
            stats.p_mean_minus_std += below_ms * inv;
            stats.p_ratio += below_ratio * inv;
          }
        }
        const double inv_trials = 1.0 / static_cast<double>(trials);
        report.per_d[i] = ValidationPoint{
            d, stats.p_mean * inv_trials,
            stats.p_mean_minus_std * inv_trials, stats.p_ratio * inv_trials,
            stats.dominance};
      },
      options.threads);
  return report;
}

}  // namespace csmabound
