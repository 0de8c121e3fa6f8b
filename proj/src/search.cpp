#include "hyperslice/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperslice {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<Vec> half_sphere_grid(int n, int count) {
  if (count < 8) throw std::invalid_argument("search resolution must be >= 8");
  std::vector<Vec> grid;
  grid.reserve(count);
  switch (n) {
    case 2:
      for (int k = 0; k < count; ++k) {
        const double phi = kPi * k / count;
        Vec x(2);
        x << std::cos(phi), std::sin(phi);
        grid.push_back(x);
      }
      break;
    case 3: {
      // Fibonacci spiral restricted to z > 0.
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (int k = 0; k < count; ++k) {
        const double z = 1.0 - (k + 0.5) / count;
        const double s = std::sqrt((1.0 - z) * (1.0 + z));
        const double phi = golden * k;
        Vec x(3);
        x << s * std::cos(phi), s * std::sin(phi), z;
        grid.push_back(x);
      }
      break;
    }
    case 4: {
      // Super-Fibonacci spiral on S^3, folded onto x_4 >= 0.
      const double phi = std::sqrt(2.0);
      const double psi = 1.533751168755204288118041;
      for (int k = 0; k < count; ++k) {
        const double s = k + 0.5;
        const double r = std::sqrt(s / count);
        const double big_r = std::sqrt(1.0 - s / count);
        const double alpha = 2.0 * kPi * s / phi;
        const double beta = 2.0 * kPi * s / psi;
        Vec x(4);
        x << r * std::sin(alpha), r * std::cos(alpha), big_r * std::sin(beta), big_r * std::cos(beta);
        x.normalize();
        if (x(3) < 0.0) x = -x;
        grid.push_back(x);
      }
      break;
    }
    default:
      throw std::invalid_argument("half_sphere_grid: n must be in {2, 3, 4}");
  }
  return grid;
}

std::size_t argmax_lowest_index(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("argmax of an empty list");
  const double top = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] >= top - 1e-12) return i;
  return 0;
}

SectionValue pattern_search(const SphereObjective& objective, SectionValue start, const PatternSearchOptions& options) {
  SectionValue cur = std::move(start);
  double step = options.initial_step;
  int moves = 0;
  while (step >= options.final_step && moves < options.max_moves) {
    const SectionFrame fr = frame(cur.direction);
    SectionValue best = cur;
    for (int j = 0; j < fr.basis.cols(); ++j) {
      for (double sign : {1.0, -1.0}) {
        Vec cand = std::cos(step) * cur.direction + (sign * std::sin(step)) * fr.basis.col(j);
        cand.normalize();
        const double v = objective(cand);
        if (v > best.value) best = {cand, v};
      }
    }
    if (best.value > cur.value + options.relative_improvement * std::abs(cur.value)) {
      cur = std::move(best);
      ++moves;
    } else {
      step *= 0.5;
    }
  }
  return cur;
}

GridSearch maximize_on_sphere(int n, const SphereObjective& objective, int resolution, Execution exec,
                              const PatternSearchOptions& options) {
  GridSearch out;
  out.grid = half_sphere_grid(n, resolution);
  out.values.assign(out.grid.size(), 0.0);
  const auto count = static_cast<std::ptrdiff_t>(out.grid.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) out.values[i] = objective(out.grid[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) out.values[i] = objective(out.grid[i]);
  }
  out.best_index = argmax_lowest_index(out.values);
  out.best = pattern_search(objective, {out.grid[out.best_index], out.values[out.best_index]}, options);
  return out;
}

SectionValue max_section(const Body& body, const Density& density, const QuadratureSpec& spec, int search_resolution,
                         Execution exec) {
  if (search_resolution < 8) throw std::invalid_argument("search resolution must be >= 8");
  const PolarIntegrator integ(body.dimension(), spec);
  auto objective = [&](const Vec& xi) { return integ.section_measure(body, density, xi); };
  return maximize_on_sphere(body.dimension(), objective, search_resolution, exec).best;
}

}  // namespace hyperslice
