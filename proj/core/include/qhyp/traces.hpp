#pragma once

// L-traces of polynomial functions in factorized form. With
// L = c·D₁D₂D₃D₄, Dⱼ = ⟨∇,aʲ⟩, integration by parts gives
//   ∫(Lu·v − u·Lv) = ∫∂ [L̃₃·v − L̃₂·L⁺₁v + L̃₁·L⁺₂v − L̃₀·L⁺₃v]
// with L̃ₖu = c⟨ν,a^{4−k}⟩·D_{5−k}···D₄u and L⁺ₘv = Dₘ···D₁v.

#include <array>
#include <vector>

#include "qhyp/poly.hpp"
#include "qhyp/quadrature.hpp"
#include "qhyp/symbol.hpp"

namespace qhyp {

struct TraceSet {
  BoundaryRule rule;                     // the curve the samples live on
  std::array<std::vector<double>, 4> L;  // L[k][i] = L̃ₖu at rule.nodes[i]

  bool consistent() const;
};

// u, u′ν, u″νν, u‴ννν on Γ₀ as polynomials in x1.
struct CauchyData {
  UniPoly phi, psi, sigma, chi;
};

TraceSet tilde_traces(const BiPoly& u, const CharacteristicSystem& sys, const BoundaryRule& rule);

// L⁺ₘv for m = 0..3 as polynomials.
std::array<BiPoly, 4> adjoint_pairings(const BiPoly& v, const CharacteristicSystem& sys);

struct GreenResidual {
  double lhs = 0.0;  // ∫Ω (Lu·v − u·Lv)
  double rhs = 0.0;  // boundary form
  double relative = 0.0;  // |lhs − rhs| / (1 + |lhs|)
};

GreenResidual green_identity_residual(const BiPoly& u, const BiPoly& v,
                                      const CharacteristicSystem& sys, const QuadratureRule& area,
                                      const BoundaryRule& boundary);

// Largest |L̃ₖ| over samples on edges labelled with characteristic j, where
// k = 3 − j is the trace carrying ⟨ν,aʲ⟩. Zero when no edge is characteristic.
double characteristic_edge_trace_max(const TraceSet& ts);

// true iff every sample of every trace is ≥ −tol.
bool sign_check(const TraceSet& ts, double tol = 1e-12);
// Per-trace minimum over samples whose label matches (all samples for
// label_plain).
std::array<double, 4> trace_minima(const TraceSet& ts, int label);

// Coefficient table of the tilde traces on a flat boundary x2 = 0 with normal
// (0, n2): L̃ₖ = Σ coeff·(d/dx1)^order datum_b, datum_0..3 = φ, ψ, σ, χ.
struct CauchyTerm {
  int datum = 0;  // 0 φ, 1 ψ, 2 σ, 3 χ
  int order = 0;  // tangential derivatives applied to the datum
  double coeff = 0.0;
};
using CauchyTable = std::array<std::vector<CauchyTerm>, 4>;

CauchyTable cauchy_table(const CharacteristicSystem& sys, double n2 = -1.0);

// Restrictions of u and its normal derivatives to x2 = 0, normal (0, n2).
CauchyData extract_cauchy_data(const BiPoly& u, double n2 = -1.0);

// Throws errc::unsupported_curve unless every node has x2 = 0 and every
// normal is (0, ±1) with one common sign.
TraceSet traces_from_cauchy(const CauchyData& cd, const CharacteristicSystem& sys,
                            const BoundaryRule& rule);

// Second-order fixture L = ∂²/∂x1∂x2 on the unit circle, L(x) = x1x2:
// L₍₁₎u = L(x)u′ν + L′τu′τ + ½L″ττu and L₍₀₎u = −L(x)u.
std::vector<double> wave_L1_trace(const BiPoly& u, const BoundaryRule& circle);
std::vector<double> wave_L0_trace(const BiPoly& u, const BoundaryRule& circle);
// The same L₍₁₎ with every derivative replaced by fourth-order central
// differences (in θ for τ, along the ray for ν).
std::vector<double> wave_L1_trace_fd(const BiPoly& u, const BoundaryRule& circle, double h = 1e-3);

}  // namespace qhyp
