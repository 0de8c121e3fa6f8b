#include "hyperslice/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperslice/format.hpp"

namespace hyperslice {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string num(double v) { return format_number(v); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Density::Density(int dimension, DensityForm form) : dimension_(dimension), form_(std::move(form)) {
  require(dimension_ >= 2 && dimension_ <= kMaxDimension, "density dimension must be in [2, 8]");
  std::visit(overloaded{
                 [](const Constant& c) { require(std::isfinite(c.value) && c.value > 0, "constant density must be positive"); },
                 [](const IsotropicGaussian& g) { require(std::isfinite(g.sigma) && g.sigma > 0, "gaussian sigma must be positive"); },
                 [&](const AnisotropicGaussian& g) {
                   require(static_cast<int>(g.inverse_covariance_diagonal.size()) == dimension_,
                           "anisotropic_gaussian needs one entry per dimension");
                   for (double d : g.inverse_covariance_diagonal)
                     require(std::isfinite(d) && d > 0, "anisotropic_gaussian entries must be positive");
                 },
                 [](const RationalDecay& r) { require(std::isfinite(r.s) && r.s > 0, "rational_decay exponent must be positive"); },
                 [&](const CosinePerturbed& c) {
                   require(c.base != nullptr, "cosine_perturbed needs a base density");
                   require(c.base->dimension() == dimension_, "cosine_perturbed base has wrong dimension");
                   require(std::abs(c.amplitude) < 1.0, "cosine_perturbed amplitude must satisfy |a| < 1");
                   require(c.frequency.size() == dimension_ && c.frequency.allFinite(),
                           "cosine_perturbed frequency has wrong dimension");
                 },
             },
             form_);
}

double Density::operator()(const Vec& x) const {
  if (x.size() != dimension_) throw std::invalid_argument("density: dimension mismatch");
  return eval_unchecked(x);
}

double Density::eval_unchecked(const Vec& x) const {
  return std::visit(overloaded{
                        [](const Constant& c) { return c.value; },
                        [&](const IsotropicGaussian& g) { return std::exp(-x.squaredNorm() / (2.0 * g.sigma * g.sigma)); },
                        [&](const AnisotropicGaussian& g) {
                          double q = 0.0;
                          for (int i = 0; i < dimension_; ++i) q += g.inverse_covariance_diagonal[i] * x(i) * x(i);
                          return std::exp(-0.5 * q);
                        },
                        [&](const RationalDecay& r) { return std::pow(1.0 + x.squaredNorm(), -r.s); },
                        [&](const CosinePerturbed& c) {
                          const double cw = std::cos(c.frequency.dot(x));
                          return c.base->eval_unchecked(x) * (1.0 + c.amplitude * cw * cw);
                        },
                    },
                    form_);
}

std::string Density::describe() const {
  return std::visit(overloaded{
                        [](const Constant& c) { return "constant(" + num(c.value) + ")"; },
                        [](const IsotropicGaussian& g) { return "gaussian(sigma=" + num(g.sigma) + ")"; },
                        [](const AnisotropicGaussian& g) {
                          std::string s = "anisotropic_gaussian(";
                          for (std::size_t i = 0; i < g.inverse_covariance_diagonal.size(); ++i)
                            s += (i ? " " : "") + num(g.inverse_covariance_diagonal[i]);
                          return s + ")";
                        },
                        [](const RationalDecay& r) { return "rational_decay(s=" + num(r.s) + ")"; },
                        [](const CosinePerturbed& c) {
                          std::string w;
                          for (int i = 0; i < c.frequency.size(); ++i) w += (i ? " " : "") + num(c.frequency(i));
                          return "cosine_perturbed(" + c.base->describe() + "; a=" + num(c.amplitude) + "; w=[" + w + "])";
                        },
                    },
                    form_);
}

Density make_constant(int n, double c) { return Density(n, Constant{c}); }
Density make_gaussian(int n, double sigma) { return Density(n, IsotropicGaussian{sigma}); }

}  // namespace hyperslice
