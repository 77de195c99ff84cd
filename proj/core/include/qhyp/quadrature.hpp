#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qhyp/vec2.hpp"

namespace qhyp {

// Deterministic pairwise summation; the only reduction used for integrals so
// results do not depend on how the caller groups work.
double pairwise_sum(std::span<const double> values);

// Area rule. Weights are positive and sum to the measure of the region.
struct QuadratureRule {
  std::vector<Vec2> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    std::vector<double> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
    return pairwise_sum(terms);
  }
  double measure() const { return pairwise_sum(weights); }
};

// Edge labels carried by boundary nodes.
inline constexpr int label_gamma0 = 4;   // the initial segment Γ₀
inline constexpr int label_circle = -1;  // unit circle
inline constexpr int label_plain = -2;   // unlabeled polygon edge
// Characteristic edges use the 0-based characteristic index 0..3.

// Boundary rule: nodes with outward unit normals, arclength weights, the
// label of the curve piece each node lies on, and the curve parameter (θ on
// the circle, arclength from the edge start on polygons).
struct BoundaryRule {
  std::vector<Vec2> nodes;
  std::vector<Vec2> normals;
  std::vector<double> weights;
  std::vector<int> labels;
  std::vector<double> params;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    std::vector<double> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(i);
    return pairwise_sum(terms);
  }
  // Integral of sampled values (one per node).
  double integrate_samples(std::span<const double> values) const;
  double length() const { return pairwise_sum(weights); }
};

// Gauss–Legendre nodes and weights on [−1, 1], ascending nodes.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// Gauss–Legendre in r (Jacobian r) × uniform in θ on the unit disk.
QuadratureRule disk_quadrature(int n_r = 32, int n_t = 64);

// n equispaced nodes θ_i = 2πi/n on the unit circle, weights 2π/n.
BoundaryRule circle_quadrature(int n = 512);

// Collapsed-coordinate Gauss rule on a triangle; exact to degree 2n − 2.
QuadratureRule triangle_quadrature(Vec2 a, Vec2 b, Vec2 c, int n = 6);

// Boundary rule over the closed polygon v0 → v1 → … → v0 with n Gauss nodes
// per edge. labels[k] tags edge v_k → v_{k+1}. Works for either orientation.
BoundaryRule polygon_boundary_rule(std::span<const Vec2> vertices, std::span<const int> labels,
                                   int n_per_edge);

// Fan triangulation from the vertex centroid (polygon must be star-shaped with
// respect to it) using the degree-10 triangle rule.
QuadratureRule polygon_area_rule(std::span<const Vec2> vertices);

double signed_area(std::span<const Vec2> vertices);

}  // namespace qhyp
