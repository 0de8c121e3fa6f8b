#pragma once

#include <Eigen/Core>

namespace hyperslice {

/// Largest ambient dimension a Body may have. Keeps vectors on the stack.
inline constexpr int kMaxDimension = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDimension, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                          kMaxDimension, kMaxDimension>;

/// Tolerance on |x|_2 - 1 for inputs that must be unit vectors.
inline constexpr double kUnitTolerance = 1e-12;

inline Vec unit(int n, int axis) {
  Vec e = Vec::Zero(n);
  e(axis) = 1.0;
  return e;
}

}  // namespace hyperslice
