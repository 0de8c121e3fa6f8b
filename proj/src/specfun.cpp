#include "hyperslice/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperslice {
namespace {

// log((m)!) by direct accumulation; m stays small (<= a few hundred).
double log_factorial(int m) {
  double s = 0.0;
  for (int k = 2; k <= m; ++k) s += std::log(static_cast<double>(k));
  return s;
}

}  // namespace

HalfInteger::HalfInteger(int twice_value) : twice_(twice_value) {
  if (twice_value < 1) throw std::invalid_argument("HalfInteger: twice_value must be >= 1");
}

double log_gamma_half(HalfInteger h) {
  const int k = h.twice();
  if (k % 2 == 0) return log_factorial(k / 2 - 1);  // Gamma(m) = (m-1)!
  // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
  const int m = (k - 1) / 2;
  return log_factorial(2 * m) - log_factorial(m) - m * std::log(4.0) + 0.5 * std::log(std::numbers::pi);
}

double gamma_half(HalfInteger h) { return std::exp(log_gamma_half(h)); }

double ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("ball_volume: n must be >= 1");
  return std::exp(0.5 * n * std::log(std::numbers::pi) - log_gamma_half(HalfInteger(n + 2)));
}

double sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("sphere_area: n must be >= 1");
  return 2.0 * std::exp(0.5 * n * std::log(std::numbers::pi) - log_gamma_half(HalfInteger(n)));
}

double sharp_volume_constant(int n) {
  if (n < 2) throw std::invalid_argument("sharp_volume_constant: n must be >= 2");
  const double log_num = (n - 1.0) / n * std::log(ball_volume(n));
  return std::exp(log_num - std::log(ball_volume(n - 1)));
}

GammaLemmaSides gamma_lemma_sides(int n) {
  if (n < 2) throw std::invalid_argument("gamma_lemma_sides: n must be >= 2");
  const double e = (n - 1.0) / n;
  const double lhs = std::exp(log_gamma_half(HalfInteger(n - 1)) - e * log_gamma_half(HalfInteger(n)));
  const double rhs = std::exp(e * std::log(static_cast<double>(n)) + std::log(2.0) / n) / (n - 1.0);
  return {lhs, rhs};
}

LogConvexitySides log_convexity_sides(int n) {
  if (n < 2) throw std::invalid_argument("log_convexity_sides: n must be >= 2");
  const double e = (n - 1.0) / n;
  return {gamma_half(HalfInteger(n + 1)), std::exp(e * log_gamma_half(HalfInteger(n + 2)))};
}

}  // namespace hyperslice
