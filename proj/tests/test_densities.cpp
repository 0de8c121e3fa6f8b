#include <cmath>
#include <stdexcept>
#include <memory>
#include <random>

#include "doctest.h"
#include "hyperslice/densities.hpp"

using namespace hyperslice;

namespace {

Vec v(std::initializer_list<double> xs) {
  Vec x(static_cast<int>(xs.size()));
  int i = 0;
  for (double d : xs) x(i++) = d;
  return x;
}

std::vector<Density> forms(int n) {
  std::vector<Density> out;
  out.push_back(make_constant(n, 2.5));
  out.push_back(make_gaussian(n, 0.8));
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = 0.5 + i;
  out.emplace_back(n, AnisotropicGaussian{d});
  out.emplace_back(n, RationalDecay{1.5});
  Vec w(n);
  for (int i = 0; i < n; ++i) w(i) = 1.0 + 0.7 * i;
  out.emplace_back(n, CosinePerturbed{std::make_shared<const Density>(n, RationalDecay{0.5}), -0.8, w});
  return out;
}

}  // namespace

TEST_CASE("eval examples") {
  CHECK(make_constant(2, 1.0)(v({7, -3})) == 1.0);
  CHECK(make_gaussian(2, 1.0)(v({1, 0})) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(Density(2, RationalDecay{1.0})(v({1, 1})) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const Density cp(2, CosinePerturbed{std::make_shared<const Density>(make_constant(2, 2.0)), 0.5, v({1, 0})});
  CHECK(cp(v({0, 5})) == doctest::Approx(3.0));  // cos^2(0) = 1
}

TEST_CASE("eval rejects a dimension mismatch") {
  CHECK_THROWS_AS(make_gaussian(3)(v({1, 0})), std::invalid_argument);
}

TEST_CASE("invalid densities are rejected") {
  CHECK_THROWS_AS(make_constant(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_gaussian(2, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(Density(2, AnisotropicGaussian{{1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Density(2, CosinePerturbed{std::make_shared<const Density>(make_constant(2)), 1.0, v({1, 1})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Density(2, CosinePerturbed{nullptr, 0.1, v({1, 1})}), std::invalid_argument);
}

TEST_CASE("densities are even and positive") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 8.0);
  for (int n = 2; n <= 4; ++n) {
    for (const Density& f : forms(n)) {
      CAPTURE(f.describe());
      for (int k = 0; k < 10000; ++k) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x(i) = u(rng);
        x *= radius(rng) / std::max(x.norm(), 1e-300);
        const double fx = f(x);
        REQUIRE(fx > 0.0);
        REQUIRE(f(-x) == fx);
      }
    }
  }
}

TEST_CASE("densities are continuous on a compact set") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 2; n <= 4; ++n) {
    for (const Density& f : forms(n)) {
      for (int k = 0; k < 1000; ++k) {
        Vec x(n), dx(n);
        for (int i = 0; i < n; ++i) x(i) = u(rng), dx(i) = u(rng);
        dx *= 1e-7 / dx.norm();
        // Every form has a gradient bounded by ~20 on [-3, 3]^n.
        REQUIRE(std::abs(f(x + dx) - f(x)) <= 20.0 * 1e-7);
      }
    }
  }
}
