#pragma once

#include <cstdint>

namespace optlearn::sim {

// Counter-based stream derivation: path j of run `seed` draws from an
// xoshiro256++ engine whose state is the j-th block of a splitmix64 stream.
// Identical (seed, path) always yields the identical draw sequence, so
// episodes are reproducible under any scheduling. Gaussians via Box-Muller
// keep the sequence implementation-independent (std::normal_distribution is
// not pinned by the standard).
class Rng {
 public:
  static Rng for_path(std::uint64_t seed, std::uint64_t path);
  explicit Rng(std::uint64_t seed) : Rng(for_path(seed, 0)) {}

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();

  // Standard normal (Box-Muller, second draw cached).
  double normal();

 private:
  Rng() = default;
  std::uint64_t s_[4] = {};
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace optlearn::sim
