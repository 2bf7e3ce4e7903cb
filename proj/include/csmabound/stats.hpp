#ifndef CSMABOUND_STATS_HPP_
#define CSMABOUND_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace csmabound {

// Empirical distribution of SIR samples in dB. Samples are kept sorted so the
// object doubles as the empirical CDF; quantiles interpolate linearly between
// order statistics.
class SirDistribution {
 public:
  static SirDistribution from_samples(std::vector<double> samples_db);

  double mean() const { return mean_; }
  double std_dev() const { return std_; }  // sample standard deviation
  std::size_t sample_count() const { return sorted_.size(); }

  // Fraction of samples strictly below x.
  double prob_below(double x) const;

  // p in [0, 1].
  double quantile(double p) const;

  std::span<const double> sorted_samples() const { return sorted_; }

 private:
  std::vector<double> sorted_;
  double mean_ = 0.0;
  double std_ = 0.0;
};

}  // namespace csmabound

#endif  // CSMABOUND_STATS_HPP_
