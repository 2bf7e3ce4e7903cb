#include "csmabound/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csmabound {

double mean_power(double distance_m, const RadioEnvironment& env) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("distance must be > 0");
  }
  return env.p_t * std::pow(distance_m, -env.eta);
}

double sample_power(double distance_m, const RadioEnvironment& env,
                    RngStream& rng) {
  const double psi_db = env.sigma_db * rng.normal();
  return mean_power(distance_m, env) * std::pow(10.0, psi_db / 10.0);
}

double to_db(double linear) {
  if (!(linear > 0.0)) {
    throw std::invalid_argument("dB conversion requires a positive value");
  }
  return 10.0 * std::log10(linear);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

double fading_log_scale(double sigma_db) {
  return sigma_db * std::numbers::ln10 / 10.0;
}

}  // namespace csmabound
