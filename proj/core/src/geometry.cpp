#include "qhyp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qhyp {

DomainPolynomial::DomainPolynomial(BiPoly p, std::span<const Vec2> boundary_samples,
                                   double min_gradient)
    : p_(std::move(p)), grad_{p_.partial(0), p_.partial(1)} {
  for (const Vec2& x : boundary_samples) {
    const double g = std::hypot(grad_[0](x.x, x.y), grad_[1](x.x, x.y));
    if (g < min_gradient)
      throw error(errc::precondition_violation,
                  "boundary is degenerate: |∇P| = " + std::to_string(g));
  }
}

DomainPolynomial DomainPolynomial::unit_disk() {
  const BiPoly p = BiPoly::constant(1.0) - BiPoly::monomial(2, 0) - BiPoly::monomial(0, 2);
  const auto circle = circle_quadrature(256);
  return DomainPolynomial(p, circle.nodes);
}

Vec2 DomainPolynomial::outward_normal(Vec2 x) const {
  const Vec2 g{grad_[0](x.x, x.y), grad_[1](x.x, x.y)};
  return (-1.0 / norm(g)) * g;
}

SegmentGamma0::SegmentGamma0(double left, double right) : a(left), b(right) {
  if (!(left < right)) throw error(errc::precondition_violation, "Γ₀ needs a < b");
}

BoundaryRule segment_rule(const SegmentGamma0& g, int n) {
  const auto [gx, gw] = gauss_legendre(n);
  BoundaryRule rule;
  const double half = 0.5 * (g.b - g.a);
  for (int i = 0; i < n; ++i) {
    const double x = g.a + half * (gx[i] + 1.0);
    rule.nodes.push_back({x, 0.0});
    rule.normals.push_back({0.0, -1.0});
    rule.weights.push_back(half * gw[i]);
    rule.labels.push_back(label_gamma0);
    rule.params.push_back(x);
  }
  return rule;
}

double CharacteristicPentagon::area() const { return std::abs(signed_area(vertices)); }

double CharacteristicPentagon::orientation() const { return signed_area(vertices) > 0 ? 1.0 : -1.0; }

bool CharacteristicPentagon::contains(Vec2 x) const {
  // Crossing parity (the pentagon need not be convex).
  bool inside = false;
  for (std::size_t k = 0; k < 5; ++k) {
    const Vec2 p = vertices[k], q = vertices[(k + 1) % 5];
    const Vec2 e = q - p;
    const double len = norm(e);
    const double t = std::clamp(dot(x - p, e) / (len * len), 0.0, 1.0);
    if (norm(x - (p + t * e)) <= 1e-12 * (1.0 + len)) return false;
    if ((p.y > x.y) != (q.y > x.y)) {
      const double xc = p.x + (x.y - p.y) * (q.x - p.x) / (q.y - p.y);
      if (x.x < xc) inside = !inside;
    }
  }
  return inside;
}

namespace {

// Intersection of p + s·u and q + t·v.
Vec2 intersect(Vec2 p, Vec2 u, Vec2 q, Vec2 v, const char* what) {
  const double det = cross(u, v);
  if (std::abs(det) <= 1e-12)
    throw error(errc::degenerate_configuration, std::string(what) + " lines are parallel");
  const double s = cross(q - p, v) / det;
  return p + s * u;
}

bool segments_cross(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const double d1 = cross(p2 - p1, q1 - p1), d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1), d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

}  // namespace

CharacteristicPentagon pentagon(Vec2 apex, const SegmentGamma0& gamma0,
                                const CharacteristicSystem& sys,
                                const PentagonAssignment& assignment) {
  if (!(apex.y > 0.0)) throw error(errc::precondition_violation, "apex must have x2 > 0");
  std::array<int, 4> idx{assignment.through_c[0], assignment.through_c[1],
                         assignment.through_ends[0], assignment.through_ends[1]};
  for (int i : idx)
    if (i < 0 || i > 3) throw error(errc::precondition_violation, "characteristic index out of range");
  for (int i = 0; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k)
      if (idx[i] == idx[k])
        throw error(errc::degenerate_configuration, "a characteristic is assigned twice");

  const Vec2 a{gamma0.a, 0.0}, b{gamma0.b, 0.0};
  const Vec2 o1 = intersect(apex, sys.tangents[idx[0]], a, sys.tangents[idx[2]], "O1");
  const Vec2 o2 = intersect(apex, sys.tangents[idx[1]], b, sys.tangents[idx[3]], "O2");
  if (!(o1.y > 0.0) || !(o2.y > 0.0))
    throw error(errc::degenerate_configuration, "O1 or O2 leaves the half-plane x2 > 0");

  CharacteristicPentagon p;
  p.vertices = {a, o1, apex, o2, b};
  p.edge_labels = {idx[2], idx[0], idx[1], idx[3], label_gamma0};
  p.assignment = assignment;

  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = i + 2; k < 5; ++k) {
      if (i == 0 && k == 4) continue;  // adjacent through the closing edge
      if (segments_cross(p.vertices[i], p.vertices[i + 1], p.vertices[k], p.vertices[(k + 1) % 5]))
        throw error(errc::degenerate_configuration, "pentagon edges cross");
    }
  if (p.area() <= 1e-12) throw error(errc::degenerate_configuration, "pentagon has no area");
  return p;
}

bool admissible_check(Vec2 apex, const SegmentGamma0& gamma0, const CharacteristicSystem& sys,
                      const PentagonAssignment& assignment) {
  try {
    const auto p = pentagon(apex, gamma0, sys, assignment);
    return std::all_of(p.vertices.begin(), p.vertices.end(), [](Vec2 v) { return v.y >= 0.0; });
  } catch (const error&) {
    return false;
  }
}

PolygonRules polygon_quadrature(const CharacteristicPentagon& p, int n_per_edge) {
  return {polygon_boundary_rule(p.vertices, p.edge_labels, n_per_edge),
          polygon_area_rule(p.vertices)};
}

}  // namespace qhyp
