#include "hyperslice/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperslice/format.hpp"
#include "hyperslice/specfun.hpp"

namespace hyperslice {
namespace {

double bound_constant(int n) { return n / (n - 1.0); }

std::string spec_tag(const QuadratureSpec& spec, int grid) {
  return "spec=" + std::to_string(spec.sphere_resolution) + "," + std::to_string(spec.radial_nodes) + "," +
         format_number(spec.refinement_factor) + ";grid=" + std::to_string(grid);
}

std::string digest_of(const std::string& canonical) { return fnv1a_hex(canonical); }

// Error of v^p given the error of v.
double power_error(double v, double p, double err) { return std::abs(p) * std::pow(v, p - 1.0) * err; }

void add_direction(InequalityReport& r, const Vec& xi) {
  for (int i = 0; i < xi.size(); ++i) r.details.emplace_back("xi_" + std::to_string(i), xi(i));
}

void check_pair(const BodyProfile& k, const BodyProfile& l) {
  if (!k.body || !l.body || !k.density || !l.density) throw std::invalid_argument("profile is empty");
  if (k.body->dimension() != l.body->dimension()) throw std::invalid_argument("bodies K and L differ in dimension");
  if (k.density->describe() != l.density->describe()) throw std::invalid_argument("K and L profiles use different densities");
  if (!(k.spec == l.spec) || k.grid_resolution != l.grid_resolution)
    throw std::invalid_argument("K and L profiles use different resolutions");
}

std::string pair_digest(const BodyProfile& k, const BodyProfile& l) {
  return digest_of("K=" + k.body->describe() + "|L=" + l.body->describe() + "|f=" + k.density->describe() + "|" +
                   spec_tag(k.spec, k.grid_resolution));
}

}  // namespace

double InequalityReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  throw std::out_of_range("report has no detail '" + key + "'");
}

InequalityReport make_report(std::string name, double lhs, double rhs, double bound_constant, double tolerance,
                             std::string digest) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.bound_constant = bound_constant;
  r.margin = rhs - lhs;
  r.tolerance = std::max(std::abs(tolerance), 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  r.passed = lhs <= rhs + r.tolerance;
  r.inputs_digest = std::move(digest);
  return r;
}

BodyProfile make_profile(const Body& body, const Density& density, const QuadratureSpec& spec, int grid_resolution,
                         Execution exec) {
  const int n = body.dimension();
  const PolarIntegrator base(n, spec);
  const PolarIntegrator fine(n, spec.refined());
  BodyProfile p;
  p.body = &body;
  p.density = &density;
  p.spec = spec;
  p.grid_resolution = grid_resolution;
  const double mu0 = base.measure(body, density, exec);
  const double mu1 = fine.measure(body, density, exec);
  p.measure = {mu1, std::abs(mu1 - mu0)};
  const double v0 = base.volume(body, exec);
  const double v1 = fine.volume(body, exec);
  p.volume = {v1, std::abs(v1 - v0)};

  const std::vector<Vec> grid = half_sphere_grid(n, grid_resolution);
  p.grid_sections.assign(grid.size(), 0.0);
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) p.grid_sections[i] = base.section_measure(body, density, grid[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) p.grid_sections[i] = base.section_measure(body, density, grid[i]);
  }
  p.digest = digest_of("K=" + body.describe() + "|f=" + density.describe() + "|" + spec_tag(spec, grid_resolution));
  return p;
}

SectionGap max_section_gap(const BodyProfile& k, const BodyProfile& l, bool absolute) {
  check_pair(k, l);
  const int n = k.body->dimension();
  const std::vector<Vec> grid = half_sphere_grid(n, k.grid_resolution);
  std::vector<double> gaps(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = k.grid_sections[i] - l.grid_sections[i];
    gaps[i] = absolute ? std::abs(d) : d;
  }
  const std::size_t start = argmax_lowest_index(gaps);

  const PolarIntegrator base(n, k.spec);
  auto gap_at = [&](const PolarIntegrator& integ, const Vec& xi) {
    const SectionFrame fr = frame(xi);
    const double d = integ.section_measure(*k.body, *k.density, fr) - integ.section_measure(*l.body, *l.density, fr);
    return absolute ? std::abs(d) : d;
  };
  const SectionValue best = pattern_search([&](const Vec& xi) { return gap_at(base, xi); }, {grid[start], gaps[start]});
  const PolarIntegrator fine(n, k.spec.refined());
  const double refined = gap_at(fine, best.direction);
  return {best.direction, best.value, std::abs(refined - best.value)};
}

InequalityReport hyperplane_report(const Body& body, const Density& density, const QuadratureSpec& spec,
                                   int search_resolution, Execution exec) {
  const int n = body.dimension();
  const PolarIntegrator base(n, spec);
  const PolarIntegrator fine(n, spec.refined());
  const double mu0 = base.measure(body, density, exec), mu1 = fine.measure(body, density, exec);
  const double v0 = base.volume(body, exec), v1 = fine.volume(body, exec);
  auto objective = [&](const Vec& xi) { return base.section_measure(body, density, xi); };
  const SectionValue best = maximize_on_sphere(n, objective, search_resolution, exec).best;
  const double s1 = fine.section_measure(body, density, best.direction);
  const double s_err = std::abs(s1 - best.value);

  const double c = bound_constant(n);
  const double vroot = std::pow(v1, 1.0 / n);
  const double rhs = c * s1 * vroot;
  const double tol = std::abs(mu1 - mu0) + c * (s_err * vroot + s1 * power_error(v1, 1.0 / n, std::abs(v1 - v0)));
  InequalityReport r = make_report(
      "hyperplane", mu1, rhs, c, tol,
      digest_of("K=" + body.describe() + "|f=" + density.describe() + "|" + spec_tag(spec, search_resolution)));
  r.details = {{"measure", mu1}, {"volume", v1}, {"max_section", s1}, {"max_section_error", s_err}};
  add_direction(r, best.direction);
  return r;
}

double volume_hyperplane_ratio(const Body& body, const QuadratureSpec& spec, int search_resolution) {
  return volume_ratio_report(body, spec, search_resolution).lhs;
}

InequalityReport volume_ratio_report(const Body& body, const QuadratureSpec& spec, int search_resolution) {
  const int n = body.dimension();
  const Density one = make_constant(n, 1.0);
  const PolarIntegrator base(n, spec);
  const PolarIntegrator fine(n, spec.refined());
  const double v0 = base.volume(body), v1 = fine.volume(body);
  auto objective = [&](const Vec& xi) { return base.section_measure(body, one, xi); };
  const SectionValue best = maximize_on_sphere(n, objective, search_resolution).best;
  const double s1 = fine.section_measure(body, one, best.direction);

  const double a = (n - 1.0) / n;
  const double ratio = std::pow(v1, a) / s1;
  const double tol = ratio * (a * std::abs(v1 - v0) / v1 + std::abs(s1 - best.value) / s1);
  const double sharp = sharp_volume_constant(n);
  InequalityReport r = make_report("volume_ratio", ratio, sharp, sharp, tol,
                                   digest_of("K=" + body.describe() + "|" + spec_tag(spec, search_resolution)));
  r.details = {{"volume", v1}, {"max_section", s1}};
  add_direction(r, best.direction);
  return r;
}

InequalityReport stability_report(const BodyProfile& k, const BodyProfile& l) {
  check_pair(k, l);
  const int n = k.body->dimension();
  const SectionGap gap = max_section_gap(k, l, false);
  const double eps = std::max(gap.value + gap.error, kEpsilonFloor);
  const double c = bound_constant(n);
  const double vroot = std::pow(k.volume.value, 1.0 / n);
  const double rhs = l.measure.value + c * eps * vroot;
  const double tol = k.measure.error + l.measure.error + c * eps * power_error(k.volume.value, 1.0 / n, k.volume.error);
  InequalityReport r = make_report("stability", k.measure.value, rhs, c, tol, pair_digest(k, l));
  r.details = {{"epsilon", eps}, {"gap", gap.value}, {"gap_error", gap.error},
               {"measure_K", k.measure.value}, {"measure_L", l.measure.value}, {"volume_K", k.volume.value}};
  add_direction(r, gap.direction);
  return r;
}

InequalityReport stability_report(const Body& k, const Body& l, const Density& density, const QuadratureSpec& spec,
                                  int grid_resolution) {
  return stability_report(make_profile(k, density, spec, grid_resolution),
                          make_profile(l, density, spec, grid_resolution));
}

InequalityReport difference_report(const BodyProfile& k, const BodyProfile& l) {
  check_pair(k, l);
  const int n = k.body->dimension();
  const SectionGap gap = max_section_gap(k, l, true);
  const double delta = gap.value + gap.error;
  const double c = bound_constant(n);
  const Estimate& big = k.volume.value >= l.volume.value ? k.volume : l.volume;
  const double vroot = std::pow(big.value, 1.0 / n);
  const double lhs = std::abs(k.measure.value - l.measure.value);
  const double rhs = c * delta * vroot;
  const double tol = k.measure.error + l.measure.error + c * delta * power_error(big.value, 1.0 / n, big.error);
  InequalityReport r = make_report("difference", lhs, rhs, c, tol, pair_digest(k, l));
  r.details = {{"max_abs_gap", delta}, {"gap_error", gap.error}, {"measure_K", k.measure.value},
               {"measure_L", l.measure.value}, {"volume_K", k.volume.value}, {"volume_L", l.volume.value}};
  add_direction(r, gap.direction);
  return r;
}

InequalityReport difference_report(const Body& k, const Body& l, const Density& density, const QuadratureSpec& spec,
                                   int grid_resolution) {
  return difference_report(make_profile(k, density, spec, grid_resolution),
                           make_profile(l, density, spec, grid_resolution));
}

VolumeStabilityReport volume_stability_report(const BodyProfile& k, const BodyProfile& l) {
  check_pair(k, l);
  const auto* c1 = std::get_if<Constant>(&k.density->form());
  if (!c1 || c1->value != 1.0) throw std::invalid_argument("volume stability needs the constant density 1");
  const int n = k.body->dimension();
  const SectionGap gap = max_section_gap(k, l, false);
  const double eps = std::max(gap.value + gap.error, kEpsilonFloor);
  const double a = (n - 1.0) / n;
  const double c = bound_constant(n);
  const Estimate& vk = k.volume;
  const Estimate& vl = l.volume;
  const std::string digest = pair_digest(k, l);

  VolumeStabilityReport out;
  out.volume_form = make_report("volume_stability", std::pow(vk.value, a), std::pow(vl.value, a) + eps, 1.0,
                                power_error(vk.value, a, vk.error) + power_error(vl.value, a, vl.error), digest);
  out.measure_form =
      make_report("volume_stability_measure_form", vk.value, vl.value + c * eps * std::pow(vk.value, 1.0 / n), c,
                  vk.error + vl.error + c * eps * power_error(vk.value, 1.0 / n, vk.error), digest);
  for (InequalityReport* r : {&out.volume_form, &out.measure_form}) {
    r->details = {{"epsilon", eps}, {"gap", gap.value}, {"gap_error", gap.error},
                  {"volume_K", vk.value}, {"volume_L", vl.value}};
    add_direction(*r, gap.direction);
  }
  return out;
}

VolumeStabilityReport volume_stability_report(const Body& k, const Body& l, const QuadratureSpec& spec,
                                              int grid_resolution) {
  const Density one = make_constant(k.dimension(), 1.0);
  return volume_stability_report(make_profile(k, one, spec, grid_resolution),
                                 make_profile(l, one, spec, grid_resolution));
}

LemmaSides lemma_ell_gap(int n, double a, double b, const std::function<double(double)>& alpha) {
  if (n < 2) throw std::invalid_argument("lemma_ell_gap: n must be >= 2");
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("lemma_ell_gap: a and b must be positive");
  static const GaussLegendre gl = gauss_legendre(64);
  // (int_0^x t^(n-1) alpha, int_0^x t^(n-2) alpha)
  auto moments = [&](double x) {
    double hi = 0.0, lo = 0.0;
    for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
      const double t = 0.5 * x * (1.0 + gl.nodes[j]);
      const double v = alpha(t);
      if (v < 0.0) throw std::invalid_argument("lemma_ell_gap: alpha is negative at a sample point");
      hi += gl.weights[j] * std::pow(t, n - 1) * v;
      lo += gl.weights[j] * std::pow(t, n - 2) * v;
    }
    return std::pair{0.5 * x * hi, 0.5 * x * lo};
  };
  const auto [ha, la] = moments(a);
  const auto [hb, lb] = moments(b);
  return {ha - a * la, hb - a * lb};
}

}  // namespace hyperslice
