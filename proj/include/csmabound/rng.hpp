#ifndef CSMABOUND_RNG_HPP_
#define CSMABOUND_RNG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace csmabound {

// splitmix64 finalizer; also used to combine seeds and salts.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic random stream (xoshiro256++ core, Box-Muller normals).
//
// Streams are value types identified by their seed. `derive(salt)` returns an
// independent child stream that depends only on (seed, salt), never on how
// much the parent has been consumed; batch samplers use it so that results are
// independent of evaluation order. `spawn()` consumes one draw and returns a
// fresh child, for sequential call sites.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      word = mix64(sm);
      sm = word;
    }
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller. Stateless (no cached spare), two uniforms
  // per draw, so consumption is a pure function of the call count.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Unbiased integer in [0, bound). bound must be >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  RngStream derive(std::uint64_t salt) const {
    return RngStream(mix64(seed_ ^ mix64(salt)));
  }

  RngStream derive(std::uint64_t salt_a, std::uint64_t salt_b) const {
    return derive(mix64(salt_a) ^ mix64(mix64(salt_b)));
  }

  RngStream spawn() { return RngStream(mix64(seed_ ^ next_u64())); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace csmabound

#endif  // CSMABOUND_RNG_HPP_
