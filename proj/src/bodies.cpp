#include "hyperslice/bodies.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperslice/format.hpp"

namespace hyperslice {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string num(double v) { return format_number(v); }

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += num(v[i]);
  }
  return out;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate(int n, const EuclideanBall& b) {
  require(std::isfinite(b.radius) && b.radius > 0, "ball radius must be positive");
  (void)n;
}

void validate(int n, const Ellipsoid& e) {
  require(static_cast<int>(e.semi_axes.size()) == n, "ellipsoid needs one semi-axis per dimension");
  for (double a : e.semi_axes) require(std::isfinite(a) && a > 0, "ellipsoid semi-axes must be positive");
}

void validate(int n, const LpBall& l) {
  require(std::isfinite(l.p) && l.p >= 1.0, "lp_ball exponent p must be finite and >= 1");
  require(static_cast<int>(l.scales.size()) == n, "lp_ball needs one scale per dimension");
  for (double s : l.scales) require(std::isfinite(s) && s > 0, "lp_ball scales must be positive");
}

void validate(int n, const SymmetricPolytope& p) {
  require(!p.facet_normals.empty(), "polytope needs at least one facet");
  require(p.facet_normals.size() == p.offsets.size(), "polytope normals and offsets differ in count");
  for (const Vec& a : p.facet_normals) {
    require(a.size() == n, "polytope normal has wrong dimension");
    require(a.allFinite() && a.norm() > 0, "polytope normals must be nonzero");
  }
  for (double b : p.offsets) require(std::isfinite(b) && b > 0, "polytope offsets must be positive");
}

// Largest |v|_2 over the vertices of {|<x, a_i>| <= b_i}. Each vertex solves
// n active constraints; -v is a vertex whenever v is, so the first active
// sign is fixed to +1. Returns 0 if no vertex exists (unbounded set).
double polytope_vertex_radius(int n, const SymmetricPolytope& p) {
  const int m = static_cast<int>(p.facet_normals.size());
  if (m < n) return 0.0;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  double best = 0.0;
  Mat a(n, n);
  Vec rhs(n);
  auto gauge = [&](const Vec& x) {
    double g = 0.0;
    for (int i = 0; i < m; ++i) g = std::max(g, std::abs(x.dot(p.facet_normals[i])) / p.offsets[i]);
    return g;
  };
  while (true) {
    for (int r = 0; r < n; ++r) a.row(r) = p.facet_normals[pick[r]].transpose();
    Eigen::FullPivLU<Mat> lu(a);
    if (lu.rank() == n) {
      for (unsigned signs = 0; signs < (1u << (n - 1)); ++signs) {
        rhs(0) = p.offsets[pick[0]];
        for (int r = 1; r < n; ++r) rhs(r) = ((signs >> (r - 1)) & 1u ? -1.0 : 1.0) * p.offsets[pick[r]];
        Vec v = lu.solve(rhs);
        if (gauge(v) <= 1.0 + 1e-9) best = std::max(best, v.norm());
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == m - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace

Body::Body(int dimension, Shape shape) : dimension_(dimension), shape_(std::move(shape)) {
  require(dimension_ >= 2 && dimension_ <= kMaxDimension, "body dimension must be in [2, 8]");
  std::visit([&](const auto& s) { validate(dimension_, s); }, shape_);
  bounding_radius_ = compute_bounding_radius();
  require(bounding_radius_ > 0 && std::isfinite(bounding_radius_), "polytope is unbounded (normals do not span)");
}

double Body::gauge(const Vec& x) const {
  if (x.size() != dimension_) throw std::invalid_argument("gauge: dimension mismatch");
  return gauge_unchecked(x);
}

double Body::gauge_unchecked(const Vec& x) const {
  return std::visit(
      overloaded{
          [&](const EuclideanBall& b) { return x.norm() / b.radius; },
          [&](const Ellipsoid& e) {
            double s = 0.0;
            for (int i = 0; i < dimension_; ++i) {
              const double y = x(i) / e.semi_axes[i];
              s += y * y;
            }
            return std::sqrt(s);
          },
          [&](const LpBall& l) {
            double top = 0.0;
            for (int i = 0; i < dimension_; ++i) top = std::max(top, std::abs(x(i)) / l.scales[i]);
            if (top == 0.0) return 0.0;
            double s = 0.0;
            for (int i = 0; i < dimension_; ++i) s += std::pow(std::abs(x(i)) / l.scales[i] / top, l.p);
            return top * std::pow(s, 1.0 / l.p);
          },
          [&](const SymmetricPolytope& p) {
            double g = 0.0;
            for (std::size_t i = 0; i < p.offsets.size(); ++i)
              g = std::max(g, std::abs(x.dot(p.facet_normals[i])) / p.offsets[i]);
            return g;
          },
      },
      shape_);
}

double Body::radial(const Vec& theta) const {
  if (theta.size() != dimension_) throw std::invalid_argument("radial: dimension mismatch");
  if (std::abs(theta.norm() - 1.0) > kUnitTolerance) throw std::invalid_argument("radial: direction is not a unit vector");
  return 1.0 / gauge_unchecked(theta);
}

double Body::compute_bounding_radius() const {
  return std::visit(
      overloaded{
          [](const EuclideanBall& b) { return b.radius; },
          [](const Ellipsoid& e) { return *std::max_element(e.semi_axes.begin(), e.semi_axes.end()); },
          [](const LpBall& l) {
            // For p <= 2 the farthest points are the axis tips. For p > 2,
            // Hoelder on z_i = (x_i/s_i)^2 gives |s^2|_{p/(p-2)}.
            if (l.p <= 2.0) return *std::max_element(l.scales.begin(), l.scales.end());
            const double q = l.p / (l.p - 2.0);
            double top = *std::max_element(l.scales.begin(), l.scales.end());
            double s = 0.0;
            for (double sc : l.scales) s += std::pow(sc * sc / (top * top), q);
            return top * std::sqrt(std::pow(s, 1.0 / q));
          },
          [&](const SymmetricPolytope& p) { return polytope_vertex_radius(dimension_, p); },
      },
      shape_);
}

std::string Body::describe() const {
  return std::visit(
      overloaded{
          [](const EuclideanBall& b) { return "ball(r=" + num(b.radius) + ")"; },
          [](const Ellipsoid& e) { return "ellipsoid(" + join(e.semi_axes) + ")"; },
          [](const LpBall& l) { return "lp_ball(p=" + num(l.p) + "; " + join(l.scales) + ")"; },
          [](const SymmetricPolytope& p) {
            std::string s = "polytope(";
            for (std::size_t i = 0; i < p.offsets.size(); ++i) {
              if (i) s += "; ";
              s += "[" + join(std::vector<double>(p.facet_normals[i].begin(), p.facet_normals[i].end())) + "]/" +
                   num(p.offsets[i]);
            }
            return s + ")";
          },
      },
      shape_) + "[n=" + std::to_string(dimension_) + "]";
}

Body make_ball(int n, double radius) { return Body(n, EuclideanBall{radius}); }

Body make_cube(int n, double half_width) {
  SymmetricPolytope p;
  for (int i = 0; i < n; ++i) {
    p.facet_normals.push_back(unit(n, i));
    p.offsets.push_back(half_width);
  }
  return Body(n, std::move(p));
}

Body make_cross_polytope(int n, double radius) {
  SymmetricPolytope p;
  for (unsigned signs = 0; signs < (1u << (n - 1)); ++signs) {
    Vec a = Vec::Ones(n);
    for (int i = 1; i < n; ++i)
      if ((signs >> (i - 1)) & 1u) a(i) = -1.0;
    p.facet_normals.push_back(a);
    p.offsets.push_back(radius);
  }
  return Body(n, std::move(p));
}

}  // namespace hyperslice
