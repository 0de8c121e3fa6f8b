#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperslice/search.hpp"

namespace hyperslice {

/// One checked instance of an inequality lhs <= rhs.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double bound_constant = 0.0;
  double margin = 0.0;     ///< rhs - lhs
  double tolerance = 0.0;  ///< propagated quadrature error estimate, >= 0
  bool passed = false;     ///< lhs <= rhs + tolerance
  std::string inputs_digest;
  /// Named intermediate quantities (epsilon, section maxima, ...) in insertion order.
  std::vector<std::pair<std::string, double>> details;

  double detail(const std::string& key) const;
};

/// Builds a report; tolerance gets a floor of 1e-12 * max(1, |lhs|, |rhs|)
/// to absorb rounding in quantities that are exact up to floating point.
InequalityReport make_report(std::string name, double lhs, double rhs, double bound_constant, double tolerance,
                             std::string digest);

/// Smallest section slack epsilon admitted, so that epsilon > 0 always.
inline constexpr double kEpsilonFloor = 1e-12;

/// Measures of one (body, density) pair, shared by all pair reports that
/// involve it. Holds non-owning pointers; body and density must outlive it.
struct BodyProfile {
  const Body* body = nullptr;
  const Density* density = nullptr;
  QuadratureSpec spec;
  int grid_resolution = 0;
  Estimate measure;
  Estimate volume;
  std::vector<double> grid_sections;  ///< base-spec mu(K cap xi-perp) on half_sphere_grid
  std::string digest;
};

BodyProfile make_profile(const Body& body, const Density& density, const QuadratureSpec& spec,
                         int grid_resolution, Execution exec = Execution::parallel);

/// sup over xi of mu(K cap xi-perp) - mu(L cap xi-perp) (or its absolute
/// value), from the shared grid refined by pattern search. `error` is the
/// cross-resolution change of the difference at the final direction.
struct SectionGap {
  Vec direction;
  double value = 0.0;
  double error = 0.0;
};
SectionGap max_section_gap(const BodyProfile& k, const BodyProfile& l, bool absolute);

/// mu(K) <= n/(n-1) max_xi mu(K cap xi-perp) Vol_n(K)^(1/n).
InequalityReport hyperplane_report(const Body& body, const Density& density, const QuadratureSpec& spec,
                                   int search_resolution, Execution exec = Execution::parallel);

/// Vol_n(K)^((n-1)/n) / max_xi Vol_(n-1)(K cap xi-perp).
double volume_hyperplane_ratio(const Body& body, const QuadratureSpec& spec, int search_resolution);

/// The ratio above against sharp_volume_constant(n); equality at the ball.
InequalityReport volume_ratio_report(const Body& body, const QuadratureSpec& spec, int search_resolution);

/// With epsilon = max(gap, floor) inflated by its error estimate:
/// mu(K) <= mu(L) + n/(n-1) epsilon Vol_n(K)^(1/n).
InequalityReport stability_report(const BodyProfile& k, const BodyProfile& l);
InequalityReport stability_report(const Body& k, const Body& l, const Density& density, const QuadratureSpec& spec,
                                  int grid_resolution);

/// |mu(K) - mu(L)| <= n/(n-1) max_xi |gap| max(Vol_n(K)^(1/n), Vol_n(L)^(1/n)).
InequalityReport difference_report(const BodyProfile& k, const BodyProfile& l);
InequalityReport difference_report(const Body& k, const Body& l, const Density& density, const QuadratureSpec& spec,
                                   int grid_resolution);

/// Volume form Vol(K)^((n-1)/n) <= Vol(L)^((n-1)/n) + epsilon, together with
/// the measure form for f = 1 at the same epsilon, which it implies.
struct VolumeStabilityReport {
  InequalityReport volume_form;
  InequalityReport measure_form;
  /// volume_form.passed implies measure_form.passed.
  bool implication_holds() const { return !volume_form.passed || measure_form.passed; }
};
/// Profiles must use the constant density 1.
VolumeStabilityReport volume_stability_report(const BodyProfile& k, const BodyProfile& l);
VolumeStabilityReport volume_stability_report(const Body& k, const Body& l, const QuadratureSpec& spec,
                                              int grid_resolution);

struct LemmaSides {
  double lhs;
  double rhs;
};

/// lhs = int_0^a t^(n-1) alpha - a int_0^a t^(n-2) alpha,
/// rhs = int_0^b t^(n-1) alpha - a int_0^b t^(n-2) alpha,
/// each by 64-point Gauss-Legendre. Throws if alpha is negative at a node.
LemmaSides lemma_ell_gap(int n, double a, double b, const std::function<double(double)>& alpha);

}  // namespace hyperslice
