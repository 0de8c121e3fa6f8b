#pragma once

#include <cstdint>

#include "hyperslice/bodies.hpp"
#include "hyperslice/densities.hpp"
#include "hyperslice/quadrature.hpp"

namespace hyperslice {

/// Counter-based generator: the k-th draw of stream s under seed is
/// splitmix64(key(seed, s) + (k + 1) * 0x9E3779B97F4A7C15). Platform
/// independent and random-access, so sampling can be split across workers
/// without changing the draws.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const;

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMinMcSamples = 10000;
/// Samples per independently seeded block; fixed so results do not depend on the thread count.
inline constexpr std::uint64_t kMcBlock = 1 << 16;

/// Rejection sampling of mu(K) in the box [-R, R]^n, R = bounding_radius.
McEstimate mc_measure(const Body& body, const Density& density, std::uint64_t samples, std::uint64_t seed,
                      Execution exec = Execution::parallel);

/// Rejection sampling of mu(K cap xi-perp) in the (n-1)-box of frame(xi) coordinates.
McEstimate mc_section(const Body& body, const Density& density, const Vec& xi, std::uint64_t samples,
                      std::uint64_t seed, Execution exec = Execution::parallel);

}  // namespace hyperslice
