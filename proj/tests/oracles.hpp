#pragma once

// Test-only reference values and integrators. Nothing here calls into the
// quadrature module, so the checks stay independent of the code under test.

#include <cmath>
#include <functional>
#include <numbers>

#include "hyperslice/bodies.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// int_{B_2^2(1)} exp(-|x|^2/2) dx = 2 pi (1 - e^{-1/2}).
inline double gaussian_disc_measure() { return 2.0 * pi * (1.0 - std::exp(-0.5)); }

/// int_{-1}^{1} exp(-t^2/2) dt = sqrt(2 pi) erf(1/sqrt 2).
inline double gaussian_disc_section() { return std::sqrt(2.0 * pi) * std::erf(1.0 / std::sqrt(2.0)); }

/// Composite Simpson on [a, b] with `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Distance to the boundary along unit direction u by bisection on the gauge.
inline double boundary_distance(const hyperslice::Body& body, const hyperslice::Vec& u) {
  double lo = 0.0, hi = 1.0;
  while (body.gauge(hi * u) <= 1.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (body.gauge(mid * u) <= 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Length of the central chord of the square [-1,1]^2 orthogonal to angle phi.
inline double square_chord(double phi) {
  const double c = std::abs(std::cos(phi + pi / 2)), s = std::abs(std::sin(phi + pi / 2));
  return 2.0 / std::max(c, s);
}

}  // namespace oracle
