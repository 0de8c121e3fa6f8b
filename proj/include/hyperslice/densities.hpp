#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hyperslice/linalg.hpp"

namespace hyperslice {

class Density;

struct Constant {
  double value = 1.0;
};

/// exp(-|x|^2 / (2 sigma^2)), unnormalized.
struct IsotropicGaussian {
  double sigma = 1.0;
};

/// exp(-0.5 * sum_i d_i x_i^2) with d the inverse covariance diagonal.
struct AnisotropicGaussian {
  std::vector<double> inverse_covariance_diagonal;
};

/// (1 + |x|^2)^(-s).
struct RationalDecay {
  double s = 1.0;
};

/// base(x) * (1 + amplitude * cos^2(<w, x>)), |amplitude| < 1.
struct CosinePerturbed {
  std::shared_ptr<const Density> base;
  double amplitude = 0.0;
  Vec frequency;
};

using DensityForm = std::variant<Constant, IsotropicGaussian, AnisotropicGaussian, RationalDecay, CosinePerturbed>;

/// Even, positive, continuous density f on R^n. Only bounded sets are ever
/// integrated against it, so integrability on R^n is not required.
class Density {
 public:
  Density(int dimension, DensityForm form);

  int dimension() const { return dimension_; }
  const DensityForm& form() const { return form_; }

  double operator()(const Vec& x) const;
  /// Same as operator() without the dimension check; for inner loops.
  double eval_unchecked(const Vec& x) const;

  std::string describe() const;

 private:
  int dimension_;
  DensityForm form_;
};

Density make_constant(int n, double c = 1.0);
Density make_gaussian(int n, double sigma = 1.0);

}  // namespace hyperslice
