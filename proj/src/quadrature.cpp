#include "hyperslice/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperslice {
namespace {

constexpr double kPi = std::numbers::pi;

void check_dimensions(int n, const Body& body, const Density& density) {
  if (body.dimension() != n || density.dimension() != n)
    throw std::invalid_argument("quadrature: body, density and integrator dimensions differ");
}

// Fixed-order blockwise summation. The parallel branch computes block sums
// concurrently; each block is summed in node order either way.
template <class Term>
double ordered_sum(std::size_t count, Execution exec, Term term) {
  const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  auto block_sum = [&](std::size_t b) {
    const std::size_t end = std::min(count, (b + 1) * kReductionBlock);
    double s = 0.0;
    for (std::size_t i = b * kReductionBlock; i < end; ++i) s += term(i);
    return s;
  };
  double sum = 0.0;
  if (exec == Execution::serial || blocks < 2) {
    for (std::size_t b = 0; b < blocks; ++b) sum += block_sum(b);
    return sum;
  }
  std::vector<double> partial(blocks);
  const auto signed_blocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < signed_blocks; ++b) partial[b] = block_sum(static_cast<std::size_t>(b));
  for (double p : partial) sum += p;
  return sum;
}

// Unit circle points for angles 2 pi k / count, built so that point
// k + count/2 is exactly the negation of point k.
std::vector<std::pair<double, double>> circle_points(int count) {
  std::vector<std::pair<double, double>> pts(count);
  const int half = count / 2;
  for (int k = 0; k < half; ++k) {
    const double phi = 2.0 * kPi * k / count;
    pts[k] = {std::cos(phi), std::sin(phi)};
    pts[k + half] = {-pts[k].first, -pts[k].second};
  }
  return pts;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (sphere_resolution < 8 || sphere_resolution % 2 != 0)
    throw std::invalid_argument("sphere_resolution must be an even integer >= 8");
  if (radial_nodes < 4) throw std::invalid_argument("radial_nodes must be >= 4");
  if (!(refinement_factor > 1.0) || !std::isfinite(refinement_factor))
    throw std::invalid_argument("refinement_factor must be > 1");
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec r = *this;
  int res = std::max(sphere_resolution + 2, static_cast<int>(std::ceil(sphere_resolution * refinement_factor)));
  r.sphere_resolution = res + res % 2;
  r.radial_nodes = std::max(radial_nodes + 1, static_cast<int>(std::ceil(radial_nodes * refinement_factor)));
  return r;
}

GaussLegendre gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count must be >= 1");
  GaussLegendre rule;
  rule.nodes.assign(count, 0.0);
  rule.weights.assign(count, 0.0);
  // Newton on P_count from the Tricomi initial guess; the rule is mirrored
  // so that nodes are exactly symmetric.
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[count - 1 - i] = x;
    rule.weights[i] = rule.weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

ProductSphereRule::ProductSphereRule(int n, int resolution) : n_(n) {
  switch (n) {
    case 1:
      circle_ = {{1.0, 0.0}, {-1.0, 0.0}};
      return;
    case 2:
      if (resolution < 2 || resolution % 2 != 0)
        throw std::invalid_argument("sphere_rule: resolution must be even and >= 2");
      break;
    case 3:
    case 4:
      if (resolution < 4 || resolution % 2 != 0)
        throw std::invalid_argument("sphere_rule: resolution must be even and >= 4");
      break;
    default:
      throw std::invalid_argument("sphere_rule: only n in {1, 2, 3, 4} is supported");
  }
  circle_ = circle_points(resolution);
  circle_weight_ = 2.0 * kPi / resolution;
  if (n == 2) return;

  const int m = resolution / 2;
  const GaussLegendre gl = gauss_legendre(m);
  for (int i = 0; i < m; ++i) {
    const double u = gl.nodes[i];
    middle_.push_back({std::sqrt((1.0 - u) * (1.0 + u)), u, gl.weights[i]});
  }
  if (n == 3) return;

  // First polar angle a with weight sin^2 a: Gauss rule for sqrt(1 - u^2) du
  // in u = cos a (Chebyshev, second kind), exact up to degree 2m - 1.
  // Mirrored nodes give exactly antisymmetric cos a.
  outer_.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    const double a = kPi * (i + 1) / (m + 1);
    const int j = m - 1 - i;
    const double sa = std::sin(a);
    const double w = kPi / (m + 1) * sa * sa;
    outer_[i] = {sa, i == j ? 0.0 : std::cos(a), w};
    outer_[j] = {sa, -outer_[i].cos, w};
  }
}

std::size_t ProductSphereRule::size() const {
  std::size_t count = circle_.size();
  if (n_ >= 3) count *= middle_.size();
  if (n_ == 4) count *= outer_.size();
  return count;
}

double ProductSphereRule::node(std::size_t i, Vec& x) const {
  x.resize(n_);
  if (n_ == 1) {
    x(0) = circle_[i].first;
    return 1.0;
  }
  const auto [c, s] = circle_[i % circle_.size()];
  if (n_ == 2) {
    x << c, s;
    return circle_weight_;
  }
  const std::size_t rest = i / circle_.size();
  const Polar& b = middle_[rest % middle_.size()];
  if (n_ == 3) {
    x << b.sin * c, b.sin * s, b.cos;
    return b.weight * circle_weight_;
  }
  // x = (sin a sin b cos c, sin a sin b sin c, sin a cos b, cos a)
  const Polar& a = outer_[rest / middle_.size()];
  const double r = a.sin * b.sin;
  x << r * c, r * s, a.sin * b.cos, a.cos;
  return a.weight * b.weight * circle_weight_;
}

SphereRule ProductSphereRule::materialize() const {
  SphereRule rule;
  rule.dimension = n_;
  const std::size_t count = size();
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (std::size_t i = 0; i < count; ++i) rule.weights[i] = node(i, rule.nodes[i]);
  return rule;
}

SphereRule sphere_rule(int n, int resolution) { return ProductSphereRule(n, resolution).materialize(); }

SphereRule sphere_rule(int n, const QuadratureSpec& spec) {
  spec.validate();
  return sphere_rule(n, spec.sphere_resolution);
}

SectionFrame frame(const Vec& xi) {
  const int n = static_cast<int>(xi.size());
  if (n < 2 || n > kMaxDimension) throw std::invalid_argument("frame: unsupported dimension");
  if (std::abs(xi.norm() - 1.0) > kUnitTolerance) throw std::invalid_argument("frame: direction is not a unit vector");
  // v = xi + sign(xi_n) e_n never cancels; H = I - 2 v v^T / |v|^2.
  Vec v = xi;
  const double sign = xi(n - 1) >= 0.0 ? 1.0 : -1.0;
  v(n - 1) += sign;
  const double vv = v.squaredNorm();
  SectionFrame fr;
  fr.direction = xi;
  fr.basis.resize(n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    Vec col = unit(n, j) - (2.0 * v(j) / vv) * v;
    fr.basis.col(j) = col;
  }
  return fr;
}

namespace {

int checked_dimension(int n, const QuadratureSpec& spec) {
  if (n < 2 || n > 4) throw std::invalid_argument("PolarIntegrator: n must be in {2, 3, 4}");
  spec.validate();
  return n;
}

}  // namespace

PolarIntegrator::PolarIntegrator(int n, QuadratureSpec spec)
    : n_(checked_dimension(n, spec)),
      spec_(spec),
      sphere_(n, spec.sphere_resolution),
      subsphere_(n - 1, spec.sphere_resolution),
      radial_(gauss_legendre(spec.radial_nodes)) {}

// int_0^r t^power f(t theta) dt with r = radial(theta), Gauss-Legendre mapped to [0, r].
double PolarIntegrator::ray_integral(const Body& body, const Density& density, const Vec& theta, int power) const {
  const double r = body.radial(theta);
  const double half = 0.5 * r;
  double s = 0.0;
  for (std::size_t j = 0; j < radial_.nodes.size(); ++j) {
    const double t = half * (1.0 + radial_.nodes[j]);
    const Vec x = t * theta;
    s += radial_.weights[j] * std::pow(t, power) * density.eval_unchecked(x);
  }
  return half * s;
}

double PolarIntegrator::measure(const Body& body, const Density& density, Execution exec) const {
  check_dimensions(n_, body, density);
  return ordered_sum(sphere_.size(), exec, [&](std::size_t i) {
    Vec theta;
    const double w = sphere_.node(i, theta);
    return w * ray_integral(body, density, theta, n_ - 1);
  });
}

double PolarIntegrator::volume(const Body& body, Execution exec) const {
  if (body.dimension() != n_) throw std::invalid_argument("volume: dimension mismatch");
  const double sum = ordered_sum(sphere_.size(), exec, [&](std::size_t i) {
    Vec theta;
    const double w = sphere_.node(i, theta);
    return w * std::pow(body.radial(theta), n_);
  });
  return sum / n_;
}

double PolarIntegrator::section_measure(const Body& body, const Density& density, const Vec& xi,
                                        Execution exec) const {
  if (xi.size() != n_) throw std::invalid_argument("section_measure: dimension mismatch");
  return section_measure(body, density, frame(xi), exec);
}

double PolarIntegrator::section_measure(const Body& body, const Density& density, const SectionFrame& fr,
                                        Execution exec) const {
  check_dimensions(n_, body, density);
  return ordered_sum(subsphere_.size(), exec, [&](std::size_t i) {
    Vec local;
    const double w = subsphere_.node(i, local);
    const Vec theta = fr.basis * local;
    return w * ray_integral(body, density, theta, n_ - 2);
  });
}

double measure(const Body& body, const Density& density, const QuadratureSpec& spec, Execution exec) {
  return PolarIntegrator(body.dimension(), spec).measure(body, density, exec);
}

double volume(const Body& body, const QuadratureSpec& spec, Execution exec) {
  return PolarIntegrator(body.dimension(), spec).volume(body, exec);
}

double section_measure(const Body& body, const Density& density, const Vec& xi, const QuadratureSpec& spec) {
  return PolarIntegrator(body.dimension(), spec).section_measure(body, density, xi);
}

Estimate measure_estimate(const Body& body, const Density& density, const QuadratureSpec& spec) {
  const double base = measure(body, density, spec);
  const double fine = measure(body, density, spec.refined());
  return {fine, std::abs(fine - base)};
}

Estimate volume_estimate(const Body& body, const QuadratureSpec& spec) {
  const double base = volume(body, spec);
  const double fine = volume(body, spec.refined());
  return {fine, std::abs(fine - base)};
}

Estimate section_estimate(const Body& body, const Density& density, const Vec& xi, const QuadratureSpec& spec) {
  const double base = section_measure(body, density, xi, spec);
  const double fine = section_measure(body, density, xi, spec.refined());
  return {fine, std::abs(fine - base)};
}

}  // namespace hyperslice
