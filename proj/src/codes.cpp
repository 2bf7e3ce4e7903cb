#include "csmabound/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "csmabound/channel.hpp"

namespace csmabound {
namespace {

constexpr std::uint64_t kSaltSignal = 0x5349474eull;  // as in sample_sir
constexpr std::uint64_t kSaltTxCode = 0x54584344ull;
constexpr std::uint64_t kSaltNodeCodes = 0x4e434453ull;

}  // namespace

CodedSirResult sample_sir_with_codes(double d,
                                     std::span<const InterferenceSetCover>
                                         covers,
                                     double zeta, const CodeConfig& config,
                                     RngStream& rng, std::size_t n) {
  if (config.n_codes < 1) {
    throw std::invalid_argument("n_codes must be >= 1");
  }
  if (covers.empty()) {
    throw std::invalid_argument("sample_sir requires at least one cover");
  }
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
  const RadioEnvironment& env = covers.front().env;
  if (!(d > 0.0 && d < env.d1)) {
    throw std::invalid_argument("receiver distance must lie in (0, d1)");
  }
  bool any_nodes = false;
  for (const auto& cover : covers) any_nodes |= !cover.nodes.empty();
  if (!any_nodes) {
    throw std::invalid_argument("all covers are empty");
  }

  const RngStream root = rng.spawn();
  const std::uint64_t n_codes = static_cast<std::uint64_t>(config.n_codes);

  // The transmitter picks one code per draw, shared across covers.
  std::vector<std::uint64_t> tx_codes(n);
  {
    RngStream tx_stream = root.derive(kSaltTxCode);
    for (auto& code : tx_codes) code = tx_stream.uniform_below(n_codes);
  }

  const double scale = fading_log_scale(env.sigma_db);
  std::vector<std::vector<double>> inter(covers.size());
  for (std::size_t c = 0; c < covers.size(); ++c) {
    inter[c].assign(n, 0.0);
    const auto& cover = covers[c];
    if (cover.nodes.empty()) continue;
    std::vector<double> mp;
    mp.reserve(cover.nodes.size());
    for (const auto& node : cover.nodes) {
      mp.push_back(env.p_t * std::pow(std::hypot(node.x - d, node.y),
                                      -env.eta));
    }
    // Fading consumption matches the uncoded sampler exactly (one psi per
    // node per draw), so n_codes == 1 reproduces sample_sir bit for bit.
    RngStream fade_stream = root.derive(cover.content_hash());
    RngStream code_stream = root.derive(cover.content_hash(), kSaltNodeCodes);
    for (std::size_t i = 0; i < n; ++i) {
      double total = 0.0;
      for (double m : mp) {
        double faded = m;
        if (env.sigma_db != 0.0) {
          faded *= std::exp(scale * fade_stream.normal());
        }
        if (code_stream.uniform_below(n_codes) == tx_codes[i]) {
          total += faded;
        }
      }
      inter[c][i] = zeta * total;
    }
  }

  const double signal_mean = mean_power(d, env);
  RngStream signal_stream = root.derive(kSaltSignal);

  CodedSirResult result;
  result.draws = n;
  std::vector<double> sir_db;
  sir_db.reserve(n);
  double kept_sum = 0.0;
  double kept_sq_sum = 0.0;
  std::size_t free_draws = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double signal = signal_mean;
    if (env.sigma_db != 0.0) {
      signal *= std::exp(scale * signal_stream.normal());
    }
    double kept = 0.0;
    for (const auto& column : inter) kept = std::max(kept, column[i]);
    kept_sum += kept;
    kept_sq_sum += kept * kept;
    if (kept == 0.0) {
      ++free_draws;
    } else {
      sir_db.push_back(10.0 * std::log10(signal / kept));
    }
  }
  result.interference_free_fraction =
      static_cast<double>(free_draws) / static_cast<double>(n);
  result.interference_mean = kept_sum / static_cast<double>(n);
  if (n > 1) {
    const double var =
        (kept_sq_sum - kept_sum * kept_sum / static_cast<double>(n)) /
        static_cast<double>(n - 1);
    result.interference_std = std::sqrt(std::max(0.0, var));
  }
  if (!sir_db.empty()) {
    result.sir = SirDistribution::from_samples(std::move(sir_db));
  }
  return result;
}

double interference_free_lower_bound(const CodeConfig& config) {
  if (config.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (config.n_codes < config.n_max) {
    throw std::invalid_argument(
        "the product bound requires n_codes >= n_max");
  }
  double product = 1.0;
  for (int i = 1; i <= config.n_max; ++i) {
    product *= 1.0 - static_cast<double>(i - 1) /
                         static_cast<double>(config.n_codes);
  }
  return product;
}

int select_code_count(int n_max, double kappa) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (!(kappa >= 0.5 && kappa < 1.0)) {
    throw std::invalid_argument("kappa must be in [0.5, 1)");
  }
  // Strictly increasing in n_codes with limit 1, so the scan terminates.
  for (int n_codes = n_max;; ++n_codes) {
    if (interference_free_lower_bound({n_codes, n_max}) >= kappa) {
      return n_codes;
    }
  }
}

}  // namespace csmabound
