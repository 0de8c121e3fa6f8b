#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperslice/bodies.hpp"
#include "hyperslice/densities.hpp"
#include "hyperslice/linalg.hpp"

namespace hyperslice {

/// Resolution of the polar-coordinate rules.
///
/// sphere_resolution is the number of azimuth nodes; the product rules use
/// sphere_resolution / 2 Gauss-Legendre nodes per polar angle, so it must be
/// even. Every top-level integral is also evaluated at refined() to produce
/// an a posteriori error estimate.
struct QuadratureSpec {
  int sphere_resolution = 32;
  int radial_nodes = 12;
  double refinement_factor = 2.0;

  /// Throws std::invalid_argument unless sphere_resolution >= 8 and even,
  /// radial_nodes >= 4 and refinement_factor > 1.
  void validate() const;
  QuadratureSpec refined() const;

  bool operator==(const QuadratureSpec&) const = default;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int count);

/// Integrates over S^(n-1) with the (n-1)-dimensional surface measure.
/// Nodes come in exact antipodal pairs.
struct SphereRule {
  int dimension = 0;
  std::vector<Vec> nodes;
  std::vector<double> weights;
};

/// n = 1: {+1, -1} with unit weights. n = 2: `resolution` equally spaced
/// angles. n = 3: Gauss-Legendre in cos(polar) x uniform azimuth. n = 4:
/// Gaussian rules in both polar angles (Chebyshev second kind for the sin^2
/// weight, Legendre in cos for the sin weight) x uniform azimuth.
SphereRule sphere_rule(int n, int resolution);
SphereRule sphere_rule(int n, const QuadratureSpec& spec);

/// The same rule kept in factored form; nodes are generated on demand so
/// fine resolutions do not need O(resolution^(n-1)) memory.
class ProductSphereRule {
 public:
  ProductSphereRule(int n, int resolution);

  int dimension() const { return n_; }
  std::size_t size() const;
  /// Writes node i into x (resized to n) and returns its weight.
  double node(std::size_t i, Vec& x) const;
  SphereRule materialize() const;

 private:
  struct Polar {
    double sin;
    double cos;
    double weight;
  };
  int n_;
  std::vector<Polar> outer_;   // n = 4 only: first polar angle
  std::vector<Polar> middle_;  // n >= 3: cos(polar) Gauss-Legendre
  std::vector<std::pair<double, double>> circle_;
  double circle_weight_ = 1.0;
};

/// Orthonormal basis of the central hyperplane xi-perp.
struct SectionFrame {
  Vec direction;
  Mat basis;  ///< n x (n-1); columns span xi-perp
};

/// Householder frame: the reflection taking e_n to -sign(xi_n) xi, restricted
/// to e_1..e_(n-1). Bitwise deterministic in xi.
SectionFrame frame(const Vec& xi);

enum class Execution { serial, parallel };

/// Terms are added within consecutive blocks of this many nodes, then the
/// block sums are added in order. Both execution paths use this order.
inline constexpr std::size_t kReductionBlock = 4096;

/// Value at the refined spec together with |refined - base|.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Polar-coordinate integrals over a body in a fixed dimension n in {2,3,4}.
///
/// Owns the sphere rule for S^(n-1), the one for the section subsphere
/// S^(n-2) and the radial Gauss-Legendre rule, so repeated calls (direction
/// searches) do not rebuild them. Sums use the fixed blockwise order of
/// kReductionBlock; the parallel path only evaluates blocks concurrently, so
/// both paths return identical bits.
class PolarIntegrator {
 public:
  PolarIntegrator(int n, QuadratureSpec spec);

  int dimension() const { return n_; }
  const QuadratureSpec& spec() const { return spec_; }
  const ProductSphereRule& sphere() const { return sphere_; }

  /// mu(K) = int_{S^(n-1)} int_0^{1/||x||_K} t^(n-1) f(t x) dt dx.
  double measure(const Body& body, const Density& density, Execution exec = Execution::parallel) const;

  /// Vol_n(K) = (1/n) int_{S^(n-1)} ||x||_K^(-n) dx.
  double volume(const Body& body, Execution exec = Execution::parallel) const;

  /// mu(K cap xi-perp): the (n-1)-dimensional polar integral in frame(xi).
  double section_measure(const Body& body, const Density& density, const Vec& xi,
                         Execution exec = Execution::serial) const;
  double section_measure(const Body& body, const Density& density, const SectionFrame& fr,
                         Execution exec = Execution::serial) const;

 private:
  double ray_integral(const Body& body, const Density& density, const Vec& theta, int power) const;

  int n_;
  QuadratureSpec spec_;
  ProductSphereRule sphere_;
  ProductSphereRule subsphere_;
  GaussLegendre radial_;
};

double measure(const Body& body, const Density& density, const QuadratureSpec& spec,
               Execution exec = Execution::parallel);
double volume(const Body& body, const QuadratureSpec& spec, Execution exec = Execution::parallel);
double section_measure(const Body& body, const Density& density, const Vec& xi, const QuadratureSpec& spec);

Estimate measure_estimate(const Body& body, const Density& density, const QuadratureSpec& spec);
Estimate volume_estimate(const Body& body, const QuadratureSpec& spec);
Estimate section_estimate(const Body& body, const Density& density, const Vec& xi, const QuadratureSpec& spec);

}  // namespace hyperslice
