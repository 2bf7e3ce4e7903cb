#ifndef CSMABOUND_CHANNEL_HPP_
#define CSMABOUND_CHANNEL_HPP_

#include "csmabound/geometry.hpp"
#include "csmabound/rng.hpp"

namespace csmabound {

// Path-loss mean received power p_t * distance^-eta (log-normal mean).
double mean_power(double distance_m, const RadioEnvironment& env);

// One log-normal fading sample: mean_power * 10^(psi/10), psi ~ N(0, sigma^2)
// with sigma in dB. Always strictly positive.
double sample_power(double distance_m, const RadioEnvironment& env,
                    RngStream& rng);

double to_db(double linear);
double from_db(double db);

// dB -> natural-log scale factor for the fading exponent: 10^(z*sigma/10)
// == exp(z * fading_log_scale(sigma)).
double fading_log_scale(double sigma_db);

}  // namespace csmabound

#endif  // CSMABOUND_CHANNEL_HPP_
