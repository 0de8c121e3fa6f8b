#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "hyperslice/specfun.hpp"

using namespace hyperslice;
using std::numbers::pi;

TEST_CASE("gamma at half-integers") {
  CHECK(gamma_half(HalfInteger(1)) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
  CHECK(gamma_half(HalfInteger(2)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_half(HalfInteger(5)) == doctest::Approx(3.0 * std::sqrt(pi) / 4.0).epsilon(1e-14));
  CHECK(gamma_half(HalfInteger(5)) == doctest::Approx(1.3293404).epsilon(1e-7));
  CHECK_THROWS_AS(HalfInteger(0), std::invalid_argument);
}

TEST_CASE("gamma agrees with the C library up to 25") {
  for (int k = 1; k <= 50; ++k) {
    CAPTURE(k);
    CHECK(gamma_half(HalfInteger(k)) == doctest::Approx(std::tgamma(0.5 * k)).epsilon(1e-13));
  }
}

TEST_CASE("gamma recursion Gamma(h+1) = h Gamma(h)") {
  for (int k = 1; k <= 50; ++k) {
    const double h = 0.5 * k;
    const double lhs = gamma_half(HalfInteger(k + 2));
    const double rhs = h * gamma_half(HalfInteger(k));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("ball volumes and sphere areas") {
  CHECK(ball_volume(2) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ball_volume(4) == doctest::Approx(pi * pi / 2).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(2 * pi).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(sphere_area(4) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
  CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
  for (int n = 1; n <= 30; ++n) CHECK(sphere_area(n) == doctest::Approx(n * ball_volume(n)).epsilon(1e-13));
  CHECK_THROWS_AS(ball_volume(0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_area(0), std::invalid_argument);
}

TEST_CASE("sharp volume constant") {
  CHECK(sharp_volume_constant(2) == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-14));
  CHECK(sharp_volume_constant(3) == doctest::Approx(std::pow(4 * pi / 3, 2.0 / 3.0) / pi).epsilon(1e-14));
  CHECK(sharp_volume_constant(4) == doctest::Approx(std::pow(pi * pi / 2, 0.75) / (4 * pi / 3)).epsilon(1e-14));
  CHECK(sharp_volume_constant(2) == doctest::Approx(0.8862269).epsilon(1e-7));
  CHECK(sharp_volume_constant(3) == doctest::Approx(0.8271340).epsilon(1e-7));
  CHECK(sharp_volume_constant(4) == doctest::Approx(0.7904305).epsilon(1e-7));
  for (int n = 2; n <= 20; ++n) CHECK(sharp_volume_constant(n) < 1.0);
  CHECK_THROWS_AS(sharp_volume_constant(1), std::invalid_argument);
}

TEST_CASE("gamma lemma sides") {
  auto s2 = gamma_lemma_sides(2);
  CHECK(s2.lhs == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
  CHECK(s2.rhs == doctest::Approx(2.0).epsilon(1e-14));
  auto s3 = gamma_lemma_sides(3);
  CHECK(s3.lhs == doctest::Approx(1.0838523).epsilon(1e-7));
  CHECK(s3.rhs == doctest::Approx(std::cbrt(18.0) / 2).epsilon(1e-14));
  auto s4 = gamma_lemma_sides(4);
  CHECK(s4.lhs == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-14));
  CHECK(s4.rhs == doctest::Approx(std::pow(128.0, 0.25) / 3).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_lemma_sides(1), std::invalid_argument);
}

TEST_CASE("gamma lemma and log-convexity hold for 2 <= n <= 50") {
  for (int n = 2; n <= 50; ++n) {
    CAPTURE(n);
    const auto g = gamma_lemma_sides(n);
    CHECK(g.lhs <= g.rhs * (1 + 1e-12));
    const auto lc = log_convexity_sides(n);
    CHECK(lc.lhs <= lc.rhs * (1 + 1e-12));
    // Independent route through std::lgamma.
    CHECK(lc.lhs == doctest::Approx(std::exp(std::lgamma((n + 1) / 2.0))).epsilon(1e-12));
  }
}
