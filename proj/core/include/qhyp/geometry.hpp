#pragma once

#include <array>
#include <span>

#include "qhyp/poly.hpp"
#include "qhyp/quadrature.hpp"
#include "qhyp/symbol.hpp"

namespace qhyp {

// Ω = {P(x) > 0}. Only evaluation and normal fields; quadrature exists for the
// unit disk and polygons.
class DomainPolynomial {
 public:
  // Checks |∇P| ≥ min_gradient at the supplied points of {P = 0}.
  DomainPolynomial(BiPoly p, std::span<const Vec2> boundary_samples, double min_gradient = 1e-6);

  static DomainPolynomial unit_disk();

  const BiPoly& polynomial() const { return p_; }
  const std::array<BiPoly, 2>& gradient() const { return grad_; }
  double operator()(Vec2 x) const { return p_(x.x, x.y); }
  bool contains(Vec2 x) const { return (*this)(x) > 0.0; }
  // −∇P/|∇P|, outward on {P = 0}.
  Vec2 outward_normal(Vec2 x) const;

 private:
  BiPoly p_;
  std::array<BiPoly, 2> grad_;
};

// {x1 ∈ [a, b], x2 = 0}
struct SegmentGamma0 {
  double a = -1.0;
  double b = 1.0;

  SegmentGamma0() = default;
  SegmentGamma0(double left, double right);
};

// Gauss–Legendre rule on Γ₀ with outward normal (0, −1), labels label_gamma0,
// params = x1.
BoundaryRule segment_rule(const SegmentGamma0& g, int n);

// Which characteristics (0-based) pass through the apex C and through the ends
// a (through_ends[0]) and b (through_ends[1]).
struct PentagonAssignment {
  std::array<int, 2> through_c{0, 1};
  std::array<int, 2> through_ends{2, 3};
};

// Vertices in the order a, O1, C, O2, b. Edge k joins vertices[k] and
// vertices[k+1 mod 5]; edge_labels[k] is the characteristic index of that
// edge or label_gamma0 for b → a. O1 = C_{through_c[0]} ∩ C_{through_ends[0]},
// O2 = C_{through_c[1]} ∩ C_{through_ends[1]}.
struct CharacteristicPentagon {
  std::array<Vec2, 5> vertices{};
  std::array<int, 5> edge_labels{};
  PentagonAssignment assignment;

  double area() const;
  // Positive when the named order is counterclockwise.
  double orientation() const;
  bool contains(Vec2 x) const;  // strict interior
  Vec2 apex() const { return vertices[2]; }
};

CharacteristicPentagon pentagon(Vec2 apex, const SegmentGamma0& gamma0,
                                const CharacteristicSystem& sys,
                                const PentagonAssignment& assignment = {});

bool admissible_check(Vec2 apex, const SegmentGamma0& gamma0, const CharacteristicSystem& sys,
                      const PentagonAssignment& assignment = {});

struct PolygonRules {
  BoundaryRule boundary;
  QuadratureRule area;
};

PolygonRules polygon_quadrature(const CharacteristicPentagon& p, int n_per_edge = 32);

}  // namespace qhyp
