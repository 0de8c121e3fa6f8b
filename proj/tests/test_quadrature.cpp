#include <cmath>
#include <stdexcept>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hyperslice/quadrature.hpp"
#include "hyperslice/specfun.hpp"
#include "oracles.hpp"

using namespace hyperslice;

namespace {

Vec v(std::initializer_list<double> xs) {
  Vec x(static_cast<int>(xs.size()));
  int i = 0;
  for (double d : xs) x(i++) = d;
  return x;
}

Vec random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec x(n);
  for (int i = 0; i < n; ++i) x(i) = g(rng);
  return x / x.norm();
}

std::vector<Body> catalog(int n) {
  std::vector<Body> out;
  out.push_back(make_ball(n, 0.8));
  std::vector<double> axes(n), scales(n);
  for (int i = 0; i < n; ++i) axes[i] = 0.6 + 0.3 * i, scales[i] = 1.2 - 0.15 * i;
  out.emplace_back(n, Ellipsoid{axes});
  out.emplace_back(n, LpBall{1.5, scales});
  out.emplace_back(n, LpBall{4.0, scales});
  out.push_back(make_cube(n, 0.9));
  out.push_back(make_cross_polytope(n, 1.2));
  return out;
}

// A fine spec for polytopes, whose kinks limit product rules to O(h^2).
QuadratureSpec fine(int resolution) {
  QuadratureSpec s;
  s.sphere_resolution = resolution;
  s.radial_nodes = 4;
  return s;
}

}  // namespace

TEST_CASE("QuadratureSpec validation and refinement") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.sphere_resolution = 6;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.sphere_resolution = 9;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.radial_nodes = 3;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.refinement_factor = 1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  QuadratureSpec base{32, 12, 2.0};
  const QuadratureSpec r = base.refined();
  CHECK(r.sphere_resolution == 64);
  CHECK(r.radial_nodes == 24);
  QuadratureSpec odd{10, 5, 1.3};
  const QuadratureSpec r2 = odd.refined();
  CHECK(r2.sphere_resolution % 2 == 0);
  CHECK(r2.sphere_resolution > 10);
  CHECK(r2.radial_nodes > 5);
  CHECK_NOTHROW(r2.validate());
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (int m : {1, 2, 5, 12, 64}) {
    const GaussLegendre gl = gauss_legendre(m);
    REQUIRE(gl.nodes.size() == static_cast<std::size_t>(m));
    for (int k = 0; k <= 2 * m - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
    for (int i = 0; i < m; ++i) CHECK(gl.nodes[i] == -gl.nodes[m - 1 - i]);
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("sphere_rule examples") {
  SUBCASE("circle with four nodes") {
    const SphereRule r = sphere_rule(2, 4);
    REQUIRE(r.nodes.size() == 4);
    const double pi = oracle::pi;
    for (int k = 0; k < 4; ++k) {
      CHECK(r.nodes[k](0) == doctest::Approx(std::cos(k * pi / 2)).scale(1.0).epsilon(1e-15));
      CHECK(r.nodes[k](1) == doctest::Approx(std::sin(k * pi / 2)).scale(1.0).epsilon(1e-15));
      CHECK(r.weights[k] == doctest::Approx(pi / 2).epsilon(1e-15));
    }
  }
  SUBCASE("zero sphere") {
    const SphereRule r = sphere_rule(1, 8);
    REQUIRE(r.nodes.size() == 2);
    CHECK(r.nodes[0](0) == 1.0);
    CHECK(r.nodes[1](0) == -1.0);
    CHECK(r.weights[0] == 1.0);
    CHECK(r.weights[1] == 1.0);
  }
  SUBCASE("weights sum to the sphere area") {
    for (int n : {2, 3, 4})
      for (int res : {8, 12, 32, 50}) {
        const SphereRule r = sphere_rule(n, res);
        const double sum = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
        CHECK(sum == doctest::Approx(sphere_area(n)).epsilon(1e-9));
        for (double w : r.weights) CHECK(w > 0.0);
      }
    const SphereRule r3 = sphere_rule(3, 32);
    CHECK(std::accumulate(r3.weights.begin(), r3.weights.end(), 0.0) ==
          doctest::Approx(4 * oracle::pi).epsilon(1e-8 / (4 * oracle::pi)));
  }
  SUBCASE("unsupported dimension") {
    CHECK_THROWS_AS(sphere_rule(5, 16), std::invalid_argument);
    CHECK_THROWS_AS(sphere_rule(0, 16), std::invalid_argument);
    CHECK_THROWS_AS(sphere_rule(3, 7), std::invalid_argument);
  }
}

TEST_CASE("sphere rules are unit and antipodally paired") {
  for (int n : {2, 3, 4}) {
    const SphereRule r = sphere_rule(n, 16);
    for (const Vec& x : r.nodes) CHECK(std::abs(x.norm() - 1.0) < 1e-14);
    // every node has an exact mirror with the same weight
    std::size_t matched = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      for (std::size_t j = 0; j < r.nodes.size(); ++j)
        if (r.nodes[j] == -r.nodes[i] && r.weights[j] == r.weights[i]) {
          ++matched;
          break;
        }
    CHECK(matched == r.nodes.size());
  }
}

TEST_CASE("product rule matches the materialized rule") {
  for (int n : {1, 2, 3, 4}) {
    const ProductSphereRule p(n, 12);
    const SphereRule r = sphere_rule(n, 12);
    REQUIRE(p.size() == r.nodes.size());
    Vec x;
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p.node(i, x) == r.weights[i]);
      CHECK(x == r.nodes[i]);
    }
  }
}

TEST_CASE("sphere rule integrates low-degree polynomials") {
  // int_{S^2} x_3^2 = 4 pi / 3, int_{S^3} x_1^2 x_4^2 = pi^2 / 12
  const SphereRule r3 = sphere_rule(3, 16);
  double s3 = 0.0;
  for (std::size_t i = 0; i < r3.nodes.size(); ++i) s3 += r3.weights[i] * r3.nodes[i](2) * r3.nodes[i](2);
  CHECK(s3 == doctest::Approx(4 * oracle::pi / 3).epsilon(1e-12));
  const SphereRule r4 = sphere_rule(4, 16);
  double s4 = 0.0;
  for (std::size_t i = 0; i < r4.nodes.size(); ++i) {
    const Vec& x = r4.nodes[i];
    s4 += r4.weights[i] * x(0) * x(0) * x(3) * x(3);
  }
  CHECK(s4 == doctest::Approx(oracle::pi * oracle::pi / 12).epsilon(1e-12));
}

TEST_CASE("frame examples") {
  SUBCASE("xi = e3 gives e1, e2") {
    const SectionFrame f = frame(unit(3, 2));
    CHECK(f.basis.col(0) == unit(3, 0));
    CHECK(f.basis.col(1) == unit(3, 1));
  }
  SUBCASE("xi = e2 in the plane gives e1") {
    const SectionFrame f = frame(unit(2, 1));
    CHECK(f.basis.rows() == 2);
    CHECK(f.basis.cols() == 1);
    CHECK(f.basis.col(0) == unit(2, 0));
  }
  SUBCASE("non-unit input") {
    CHECK_THROWS_AS(frame(v({1.0, 1.0})), std::invalid_argument);
    CHECK_THROWS_AS(frame(v({0.0, 0.0, 1.0 + 1e-9})), std::invalid_argument);
  }
  SUBCASE("orthonormal for random and axis directions") {
    std::mt19937_64 rng(7);
    for (int n : {2, 3, 4}) {
      std::vector<Vec> dirs;
      for (int i = 0; i < 500; ++i) dirs.push_back(random_unit(n, rng));
      for (int i = 0; i < n; ++i) dirs.push_back(unit(n, i)), dirs.push_back(-unit(n, i));
      for (const Vec& xi : dirs) {
        const SectionFrame f = frame(xi);
        CHECK((f.basis.transpose() * xi).cwiseAbs().maxCoeff() <= 1e-12);
        const Mat g = f.basis.transpose() * f.basis;
        CHECK((g - Mat::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= 1e-12);
        const SectionFrame again = frame(xi);
        CHECK(again.basis == f.basis);
      }
    }
  }
}

TEST_CASE("measure examples") {
  const QuadratureSpec spec;
  CHECK(measure(make_ball(3, 1.0), make_constant(3), spec) == doctest::Approx(4 * oracle::pi / 3).epsilon(1e-6 / 4.2));
  CHECK(std::abs(measure(make_ball(2, 1.0), make_gaussian(2, 1.0), spec) - oracle::gaussian_disc_measure()) <= 1e-6);
  CHECK(std::abs(measure(make_cube(2, 1.0), make_constant(2), fine(16384)) - 4.0) <= 1e-6);
  CHECK_THROWS_AS(measure(make_ball(3, 1.0), make_constant(2), spec), std::invalid_argument);
  CHECK_THROWS_AS(measure(make_ball(5, 1.0), make_constant(5), spec), std::invalid_argument);
}

TEST_CASE("volume examples") {
  const QuadratureSpec spec;
  CHECK(std::abs(volume(make_cube(3, 1.0), fine(16384)) - 8.0) <= 1e-6);
  CHECK(std::abs(volume(make_ball(4, 1.0), spec) - oracle::pi * oracle::pi / 2) <= 1e-6);
  CHECK(std::abs(volume(Body(2, Ellipsoid{{2.0, 1.0}}), spec) - 2 * oracle::pi) <= 1e-6);
}

TEST_CASE("section_measure examples") {
  const QuadratureSpec spec;
  const Body square = make_cube(2, 1.0);
  CHECK(std::abs(section_measure(square, make_constant(2), unit(2, 1), spec) - 2.0) <= 1e-9);
  CHECK(std::abs(section_measure(square, make_constant(2), v({1, 1}) / std::sqrt(2.0), spec) - 2 * std::sqrt(2.0)) <=
        1e-9);
  std::mt19937_64 rng(3);
  const Body disc = make_ball(2, 1.0);
  const Density g = make_gaussian(2, 1.0);
  for (int i = 0; i < 20; ++i)
    CHECK(std::abs(section_measure(disc, g, random_unit(2, rng), spec) - oracle::gaussian_disc_section()) <= 1e-6);
  CHECK_THROWS_AS(section_measure(disc, g, v({1.0, 0.1}), spec), std::invalid_argument);
}

TEST_CASE("measure with f = 1 agrees with volume") {
  const QuadratureSpec spec;
  for (int n : {2, 3, 4})
    for (const Body& b : catalog(n)) {
      const double m = measure(b, make_constant(n), spec);
      const double vol = volume(b, spec);
      CHECK(m == doctest::Approx(vol).epsilon(1e-8));
    }
}

TEST_CASE("measure is monotone under containment") {
  const QuadratureSpec spec;
  for (int n : {2, 3, 4}) {
    const Density g = make_gaussian(n, 0.8);
    CHECK(measure(make_ball(n, 0.9), g, spec) <= measure(make_ball(n, 1.0), g, spec) + 1e-10);
    std::vector<double> s(n, 1.0);
    CHECK(measure(Body(n, LpBall{1.0, s}), g, spec) <= measure(Body(n, LpBall{2.0, s}), g, spec) + 1e-10);
    CHECK(measure(Body(n, LpBall{2.0, s}), g, spec) <= measure(Body(n, LpBall{6.0, s}), g, spec) + 1e-10);
    CHECK(measure(make_cross_polytope(n, 1.0), g, spec) <= measure(make_cube(n, 1.0), g, spec) + 1e-10);
  }
}

TEST_CASE("sections of rotation-invariant data do not depend on the direction") {
  const QuadratureSpec spec;
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 4}) {
    const Body b = make_ball(n, 1.3);
    const Density g = make_gaussian(n, 0.7);
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < 100; ++i) {
      const double s = section_measure(b, g, random_unit(n, rng), spec);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    CHECK(hi - lo <= 1e-8 * hi);
  }
}

TEST_CASE("planar sections agree with a direct line integral") {
  const QuadratureSpec spec;
  std::mt19937_64 rng(5);
  const std::vector<Body> bodies = catalog(2);
  const Density dens(2, CosinePerturbed{std::make_shared<Density>(make_gaussian(2, 0.9)), 0.4, v({1.3, -0.7})});
  const GaussLegendre gl = gauss_legendre(64);
  for (const Body& b : bodies)
    for (int i = 0; i < 10; ++i) {
      const Vec xi = random_unit(2, rng);
      const Vec u = v({-xi(1), xi(0)});
      // direct: integrate f along the line through 0 in direction u over the clipped chord
      const double r_plus = oracle::boundary_distance(b, u), r_minus = oracle::boundary_distance(b, -u);
      auto line = [&](double lo, double hi) {
        double s = 0.0;
        for (int k = 0; k < 64; ++k) {
          const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[k];
          s += gl.weights[k] * dens(t * u);
        }
        return 0.5 * (hi - lo) * s;
      };
      const double direct = line(0.0, r_plus) + line(-r_minus, 0.0);
      CHECK(std::abs(section_measure(b, dens, xi, spec) - direct) <= 1e-10);
    }
}

TEST_CASE("refining the spec changes the measure by at most the reported error") {
  const QuadratureSpec spec;
  for (int n : {2, 3}) {
    for (const Body& b : catalog(n)) {
      const Density g = make_gaussian(n, 1.1);
      const Estimate e = measure_estimate(b, g, spec);
      const double finer = measure(b, g, spec.refined().refined());
      CHECK(std::abs(finer - e.value) <= e.error + 1e-12);
    }
  }
}

TEST_CASE("estimates report the refined value") {
  const QuadratureSpec spec;
  const Body b = make_cube(3, 1.0);
  const Estimate e = volume_estimate(b, spec);
  CHECK(e.value == volume(b, spec.refined()));
  CHECK(e.error == std::abs(volume(b, spec.refined()) - volume(b, spec)));
  const Estimate s = section_estimate(b, make_constant(3), unit(3, 0), spec);
  CHECK(std::abs(s.value - 4.0) <= s.error);
}

TEST_CASE("serial and parallel paths return identical bits") {
  QuadratureSpec spec{64, 12, 2.0};
  for (int n : {2, 3, 4}) {
    const PolarIntegrator integ(n, spec);
    for (const Body& b : catalog(n)) {
      const Density g = make_gaussian(n, 0.9);
      CHECK(integ.measure(b, g, Execution::serial) == integ.measure(b, g, Execution::parallel));
      CHECK(integ.volume(b, Execution::serial) == integ.volume(b, Execution::parallel));
      const Vec xi = unit(n, 0);
      CHECK(integ.section_measure(b, g, xi, Execution::serial) == integ.section_measure(b, g, xi, Execution::parallel));
    }
  }
}
