#pragma once

#include <functional>
#include <vector>

#include "hyperslice/quadrature.hpp"

namespace hyperslice {

/// A direction on S^(n-1) with the measure of the corresponding central section.
struct SectionValue {
  Vec direction;
  double value = 0.0;
};

/// Deterministic near-uniform set of `count` directions on one half of
/// S^(n-1), n in {2, 3, 4}. Objectives here are even, so half suffices.
std::vector<Vec> half_sphere_grid(int n, int count);

/// Index of the largest value; among values within 1e-12 of the maximum the
/// lowest index wins.
std::size_t argmax_lowest_index(const std::vector<double>& values);

struct PatternSearchOptions {
  double initial_step = 0.2;  ///< radians
  double final_step = 1e-4;
  int max_moves = 500;
  /// A poll must beat the current value by this relative amount to count as
  /// an improvement; keeps rounding noise from driving the walk.
  double relative_improvement = 1e-13;
};

using SphereObjective = std::function<double(const Vec&)>;

/// Compass search on the tangent chart at the current point: polls
/// +-h along each tangent basis vector, moves to the best strict improvement,
/// halves h otherwise. Never returns a smaller value than `start`.
SectionValue pattern_search(const SphereObjective& objective, SectionValue start,
                            const PatternSearchOptions& options = {});

struct GridSearch {
  std::vector<Vec> grid;
  std::vector<double> values;
  std::size_t best_index = 0;
  SectionValue best;  ///< after refinement
};

/// Evaluates `objective` on half_sphere_grid(n, resolution), then refines
/// the best node with pattern_search.
GridSearch maximize_on_sphere(int n, const SphereObjective& objective, int resolution,
                              Execution exec = Execution::parallel, const PatternSearchOptions& options = {});

/// Largest central section measure found by grid + pattern search. This is a
/// lower bound on the true maximum.
SectionValue max_section(const Body& body, const Density& density, const QuadratureSpec& spec,
                         int search_resolution, Execution exec = Execution::parallel);

}  // namespace hyperslice
