#pragma once

// Fourier transform over the unit disk K, w(ξ) = ∫_K u(x)e^{−i⟨x,ξ⟩}dx, and
// finite-difference checks of the transform-side equation for v = L(ξ)w.

#include <complex>
#include <vector>

#include "qhyp/poly.hpp"
#include "qhyp/quadrature.hpp"
#include "qhyp/symbol.hpp"

namespace qhyp {

class DiskTransform {
 public:
  explicit DiskTransform(const BiPoly& u, int n_r = 64, int n_t = 128);

  // Throws errc::accuracy_envelope_exceeded when ‖ξ‖ > envelope().
  std::complex<double> operator()(Vec2 xi) const;
  // min(n_r, n_t/2)/8; 8 for the default rule.
  double envelope() const { return envelope_; }
  int n_r() const { return n_r_; }
  int n_t() const { return n_t_; }

 private:
  int n_r_, n_t_;
  double envelope_;
  std::vector<Vec2> nodes_;
  std::vector<double> weighted_;  // wᵢ·u(xᵢ)
};

std::complex<double> transform(const BiPoly& u, Vec2 xi, int n_r = 64, int n_t = 128);

enum class dual_form {
  displayed,   // Δ²v = F[θf]
  disk_exact,  // (1 + Δ)²v = F[θ·P²f], P = 1 − |x|²
};

const char* to_string(dual_form f) noexcept;

struct DualSample {
  Vec2 xi;
  double residual = 0.0;     // |operator_h v − rhs| at ξ
  double stencil_max = 0.0;  // max |v| over the 5×5 stencil
  double relative = 0.0;     // residual / stencil_max
};

struct DualResult {
  dual_form form = dual_form::displayed;
  double h = 0.05;
  std::vector<DualSample> samples;
  double max_residual = 0.0;
  double max_relative = 0.0;
  // Error budget: truncation ~ h²·max|v|, quadrature ~ 64·ε_q/h⁴ with ε_q the
  // change in v under a refined rule at the sample points.
  double truncation_estimate = 0.0;
  double quadrature_estimate = 0.0;
};

// f = Lu for the given u (zero for kernel solutions); xi samples must keep the
// whole stencil inside the transform envelope.
DualResult dual_residual(const BiPoly& u, const CharacteristicSystem& sys,
                         const std::vector<Vec2>& xi_samples, double h = 0.05,
                         dual_form form = dual_form::displayed, int n_r = 64, int n_t = 128);

// Nine ξ samples on the circle of the given radius, rotated off the axes.
// The origin is avoided: v = L(ξ)w vanishes to fourth order there, so a
// residual relative to the stencil max of |v| means nothing.
std::vector<Vec2> default_xi_samples(double radius = 3.5);

struct GoursatLine {
  int direction = 0;
  double max_w = 0.0;  // max |w(t·ãʲ)| over |t| ≤ t_max
  double max_v = 0.0;  // same for v = L(ξ)w
};

std::vector<GoursatLine> goursat_check(const BiPoly& u, const CharacteristicSystem& sys,
                                       int n_line = 65, double t_max = 8.0, int n_r = 64,
                                       int n_t = 128);

}  // namespace qhyp
