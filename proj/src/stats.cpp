#include "csmabound/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csmabound {

SirDistribution SirDistribution::from_samples(std::vector<double> samples_db) {
  if (samples_db.empty()) {
    throw std::invalid_argument("SirDistribution requires at least one sample");
  }
  SirDistribution dist;
  dist.sorted_ = std::move(samples_db);
  std::sort(dist.sorted_.begin(), dist.sorted_.end());
  const std::size_t n = dist.sorted_.size();
  double sum = 0.0;
  for (double v : dist.sorted_) sum += v;
  dist.mean_ = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : dist.sorted_) {
      const double delta = v - dist.mean_;
      ss += delta * delta;
    }
    dist.std_ = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return dist;
}

double SirDistribution::prob_below(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double SirDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("quantile probability must be in [0, 1]");
  }
  const std::size_t n = sorted_.size();
  if (n == 1) return sorted_.front();
  const double pos = p * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= n) return sorted_.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted_[lo] + frac * (sorted_[lo + 1] - sorted_[lo]);
}

}  // namespace csmabound
