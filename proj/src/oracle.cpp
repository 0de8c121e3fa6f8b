#include "hyperslice/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hyperslice {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Samples points u in [-R, R]^dim, maps them with `embed` and accumulates
// f(x) 1[gauge(x) <= 1]. Block b uses stream b; blocks are combined in order.
template <class Embed>
McEstimate box_rejection(const Body& body, const Density& density, int dim, std::uint64_t samples,
                         std::uint64_t seed, Execution exec, Embed embed) {
  if (samples < kMinMcSamples) throw std::invalid_argument("Monte Carlo needs at least 10^4 samples");
  const double radius = body.bounding_radius();
  const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
  std::vector<BlockSums> sums(blocks);

  auto run_block = [&](std::uint64_t b) {
    const CounterRng rng(seed, b);
    const std::uint64_t begin = b * kMcBlock;
    const std::uint64_t end = std::min(samples, begin + kMcBlock);
    BlockSums acc;
    Vec u(dim);
    std::uint64_t counter = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (int j = 0; j < dim; ++j) u(j) = radius * (2.0 * rng.uniform(counter++) - 1.0);
      const Vec x = embed(u);
      if (body.gauge(x) <= 1.0) {
        const double fx = density.eval_unchecked(x);
        acc.sum += fx;
        acc.sum_sq += fx * fx;
      }
    }
    sums[b] = acc;
  };

  const auto count = static_cast<std::ptrdiff_t>(blocks);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < count; ++b) run_block(static_cast<std::uint64_t>(b));
  } else {
    for (std::ptrdiff_t b = 0; b < count; ++b) run_block(static_cast<std::uint64_t>(b));
  }

  BlockSums total;
  for (const BlockSums& s : sums) {
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double box = std::pow(2.0 * radius, dim);
  const double mean = total.sum / n;
  const double var = std::max(0.0, (total.sum_sq - n * mean * mean) / (n - 1.0));
  return {box * mean, box * std::sqrt(var / n), samples, seed};
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + kGolden))) {}

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const { return mix(key_ + (counter + 1) * kGolden); }

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

McEstimate mc_measure(const Body& body, const Density& density, std::uint64_t samples, std::uint64_t seed,
                      Execution exec) {
  if (body.dimension() != density.dimension()) throw std::invalid_argument("mc_measure: dimension mismatch");
  return box_rejection(body, density, body.dimension(), samples, seed, exec, [](const Vec& u) { return u; });
}

McEstimate mc_section(const Body& body, const Density& density, const Vec& xi, std::uint64_t samples,
                      std::uint64_t seed, Execution exec) {
  if (body.dimension() != density.dimension() || xi.size() != body.dimension())
    throw std::invalid_argument("mc_section: dimension mismatch");
  const SectionFrame fr = frame(xi);
  return box_rejection(body, density, body.dimension() - 1, samples, seed, exec,
                       [&](const Vec& u) -> Vec { return fr.basis * u; });
}

}  // namespace hyperslice
