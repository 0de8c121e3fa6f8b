#pragma once

namespace hyperslice {

/// The half-integer k/2, stored as k >= 1.
class HalfInteger {
 public:
  explicit HalfInteger(int twice_value);
  static HalfInteger from_twice(int twice_value) { return HalfInteger(twice_value); }

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }

 private:
  int twice_;
};

/// log Gamma(h) from the factorial closed forms, accumulated in log space.
double log_gamma_half(HalfInteger h);
double gamma_half(HalfInteger h);

/// |B_2^n| = pi^(n/2) / Gamma(1 + n/2).
double ball_volume(int n);

/// |S^(n-1)| = 2 pi^(n/2) / Gamma(n/2).
double sphere_area(int n);

/// |B_2^n|^((n-1)/n) / |B_2^(n-1)|; the best constant in the volume slicing
/// inequality for n <= 4, attained by the Euclidean ball.
double sharp_volume_constant(int n);

struct GammaLemmaSides {
  double lhs;  ///< Gamma((n-1)/2) / Gamma(n/2)^((n-1)/n)
  double rhs;  ///< n^((n-1)/n) 2^(1/n) / (n-1)
};
GammaLemmaSides gamma_lemma_sides(int n);

/// Both sides of Gamma((n+1)/2) <= Gamma(n/2 + 1)^((n-1)/n).
struct LogConvexitySides {
  double lhs;
  double rhs;
};
LogConvexitySides log_convexity_sides(int n);

}  // namespace hyperslice
