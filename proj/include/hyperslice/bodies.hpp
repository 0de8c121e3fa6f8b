#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperslice/linalg.hpp"

namespace hyperslice {

struct EuclideanBall {
  double radius = 1.0;
};

struct Ellipsoid {
  std::vector<double> semi_axes;
};

/// {x : sum_i |x_i / scale_i|^p <= 1}, p >= 1.
struct LpBall {
  double p = 2.0;
  std::vector<double> scales;
};

/// {x : |<x, normal_i>| <= offset_i for all i}. Each facet pair is stored once.
struct SymmetricPolytope {
  std::vector<Vec> facet_normals;
  std::vector<double> offsets;
};

using Shape = std::variant<EuclideanBall, Ellipsoid, LpBall, SymmetricPolytope>;

/// Origin-symmetric convex body described by its gauge (Minkowski functional).
///
/// Immutable after construction; the constructor validates parameters and
/// throws std::invalid_argument on anything that would not describe a
/// bounded symmetric convex body with the origin in its interior.
class Body {
 public:
  Body(int dimension, Shape shape);

  int dimension() const { return dimension_; }
  const Shape& shape() const { return shape_; }

  /// ||x||_K = min{a >= 0 : x in aK}.
  double gauge(const Vec& x) const;

  /// 1 / gauge(theta) for a unit vector theta.
  double radial(const Vec& theta) const;

  /// max |x|_2 over K. Exact for every shape family.
  double bounding_radius() const { return bounding_radius_; }

  /// Short human-readable tag, e.g. "ball(r=1)".
  std::string describe() const;

 private:
  double gauge_unchecked(const Vec& x) const;
  double compute_bounding_radius() const;

  int dimension_;
  Shape shape_;
  double bounding_radius_;
};

Body make_ball(int n, double radius = 1.0);
/// Axis-aligned cube [-h, h]^n as a polytope.
Body make_cube(int n, double half_width = 1.0);
/// Cross-polytope {sum |x_i| <= r} as a polytope with 2^(n-1) facet pairs.
Body make_cross_polytope(int n, double radius = 1.0);

}  // namespace hyperslice
