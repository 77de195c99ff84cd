#pragma once

// Moment identities against kernel ridge polynomials. For v = Q(s),
// s = −ãʲ·x, one has Lv = 0 and L⁺ₘv = κₘ·Q⁽ᵐ⁾(s) with
// κ₀ = 1, κₘ = κₘ₋₁·⟨aᵐ, −ãʲ⟩, so the Green identity becomes
//   ∫∂ [L₃Q − κ₁L₂Q′ + κ₂L₁Q″ − κ₃L₀Q‴] = ∫Ω f·Q.

#include <array>
#include <vector>

#include "qhyp/poly.hpp"
#include "qhyp/quadrature.hpp"
#include "qhyp/symbol.hpp"
#include "qhyp/traces.hpp"

namespace qhyp {

// κ₀..κ₃ for the ridge direction j.
std::array<double, 4> pairing_constants(const CharacteristicSystem& sys, int j);

struct MomentRow {
  int direction = 0;  // j
  int degree = 0;     // Q = T_k
  double boundary = 0.0;
  double area = 0.0;
  double residual = 0.0;  // |boundary − area|
};

// One row per (j, k), j = 0..3, k = 0..D, ordered by k then j.
std::vector<MomentRow> cauchy_compatibility_residuals(const BiPoly& f, const TraceSet& ts,
                                                      const CharacteristicSystem& sys,
                                                      const QuadratureRule& area, int D);

struct FredholmRow {
  int direction = 0;
  int degree = 0;
  double value = 0.0;  // ∫Ω f·Q
};

struct FredholmResidual {
  std::vector<FredholmRow> rows;
  double max_abs = 0.0;
};

FredholmResidual fredholm_residual(const BiPoly& f, const CharacteristicSystem& sys,
                                   const QuadratureRule& area, int D);

// Real trigonometric basis 1, cos θ, sin θ, …, cos Dθ, sin Dθ.
int trig_basis_size(int D_b);
double trig_basis(int m, double theta);
// L²(circle) projection of samples on a circle rule onto that basis.
std::vector<double> trig_project(const BoundaryRule& circle, std::span<const double> samples, int D_b);
std::vector<double> trig_evaluate(std::span<const double> coeffs, const BoundaryRule& circle);

struct DirichletOptions {
  int D = 16;
  int D_b = 12;
  double rank_tol = 1e-8;  // σ_min ≤ rank_tol·σ_max ⇒ rank_deficient
};

struct DirichletMoments {
  std::vector<double> L3;  // trig coefficients
  std::vector<double> L2;
  double residual_norm = 0.0;           // ‖G x − rhs‖₂ of the (row-normalized) system
  std::vector<double> singular_values;  // descending
  bool rank_deficient = false;
  int rows = 0, cols = 0;
};

// L0, L1 are samples on `circle`, which must be a circle rule (params = θ).
DirichletMoments solve_dirichlet_moments(const BiPoly& f, std::span<const double> L0,
                                         std::span<const double> L1, const CharacteristicSystem& sys,
                                         const BoundaryRule& circle, const QuadratureRule& area,
                                         const DirichletOptions& opt = {});

}  // namespace qhyp
