#include "qhyp/quadrature.hpp"

#include <cmath>

#include "qhyp/error.hpp"

namespace qhyp {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double BoundaryRule::integrate_samples(std::span<const double> values) const {
  if (values.size() != weights.size())
    throw error(errc::precondition_violation, "sample count does not match boundary rule");
  std::vector<double> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) terms[i] = weights[i] * values[i];
  return pairwise_sum(terms);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw error(errc::precondition_violation, "Gauss–Legendre needs n ≥ 1");
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return {x, w};
}

QuadratureRule disk_quadrature(int n_r, int n_t) {
  if (n_r < 1 || n_t < 1) throw error(errc::precondition_violation, "disk rule needs n_r, n_t ≥ 1");
  const auto [gx, gw] = gauss_legendre(n_r);
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n_r) * n_t);
  rule.weights.reserve(rule.nodes.capacity());
  const double dt = two_pi / n_t;
  for (int i = 0; i < n_r; ++i) {
    const double r = 0.5 * (gx[i] + 1.0);
    const double wr = 0.5 * gw[i] * r;
    for (int k = 0; k < n_t; ++k) {
      const double t = dt * k;
      rule.nodes.push_back({r * std::cos(t), r * std::sin(t)});
      rule.weights.push_back(wr * dt);
    }
  }
  return rule;
}

BoundaryRule circle_quadrature(int n) {
  if (n < 4) throw error(errc::precondition_violation, "circle rule needs n ≥ 4");
  BoundaryRule rule;
  const double dt = two_pi / n;
  for (int i = 0; i < n; ++i) {
    const double t = dt * i;
    const Vec2 p{std::cos(t), std::sin(t)};
    rule.nodes.push_back(p);
    rule.normals.push_back(p);
    rule.weights.push_back(dt);
    rule.labels.push_back(label_circle);
    rule.params.push_back(t);
  }
  return rule;
}

QuadratureRule triangle_quadrature(Vec2 a, Vec2 b, Vec2 c, int n) {
  // Duffy map (u, v) ∈ [0,1]² ↦ a + u(b − a) + uv(c − b), Jacobian 2|T|·u.
  const auto [gx, gw] = gauss_legendre(n);
  const double jac = std::abs(cross(b - a, c - a));
  QuadratureRule rule;
  for (int i = 0; i < n; ++i) {
    const double u = 0.5 * (gx[i] + 1.0);
    for (int k = 0; k < n; ++k) {
      const double v = 0.5 * (gx[k] + 1.0);
      rule.nodes.push_back(a + u * (b - a) + (u * v) * (c - b));
      rule.weights.push_back(0.25 * gw[i] * gw[k] * u * jac);
    }
  }
  return rule;
}

double signed_area(std::span<const Vec2> v) {
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) s += cross(v[k], v[(k + 1) % v.size()]);
  return 0.5 * s;
}

BoundaryRule polygon_boundary_rule(std::span<const Vec2> vertices, std::span<const int> labels,
                                   int n_per_edge) {
  if (vertices.size() < 3 || labels.size() != vertices.size())
    throw error(errc::precondition_violation, "polygon needs ≥ 3 vertices and one label per edge");
  const double orient = signed_area(vertices) > 0.0 ? 1.0 : -1.0;
  const auto [gx, gw] = gauss_legendre(n_per_edge);
  BoundaryRule rule;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const Vec2 p = vertices[k], q = vertices[(k + 1) % vertices.size()];
    const double len = norm(q - p);
    const Vec2 d = (1.0 / len) * (q - p);
    const Vec2 outward = orient > 0 ? Vec2{d.y, -d.x} : Vec2{-d.y, d.x};
    for (int i = 0; i < n_per_edge; ++i) {
      const double s = 0.5 * (gx[i] + 1.0);
      rule.nodes.push_back(p + s * (q - p));
      rule.normals.push_back(outward);
      rule.weights.push_back(0.5 * gw[i] * len);
      rule.labels.push_back(labels[k]);
      rule.params.push_back(s * len);
    }
  }
  return rule;
}

QuadratureRule polygon_area_rule(std::span<const Vec2> vertices) {
  Vec2 centroid{};
  for (const Vec2& v : vertices) centroid = centroid + v;
  centroid = (1.0 / static_cast<double>(vertices.size())) * centroid;
  QuadratureRule rule;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto tri = triangle_quadrature(centroid, vertices[k], vertices[(k + 1) % vertices.size()]);
    rule.nodes.insert(rule.nodes.end(), tri.nodes.begin(), tri.nodes.end());
    rule.weights.insert(rule.weights.end(), tri.weights.begin(), tri.weights.end());
  }
  return rule;
}

}  // namespace qhyp
