#include "qhyp/duality.hpp"

#include <algorithm>
#include <cmath>

namespace qhyp {

DiskTransform::DiskTransform(const BiPoly& u, int n_r, int n_t)
    : n_r_(n_r), n_t_(n_t), envelope_(std::min(n_r, n_t / 2) / 8.0) {
  const auto rule = disk_quadrature(n_r, n_t);
  nodes_ = rule.nodes;
  weighted_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    weighted_[i] = rule.weights[i] * u(nodes_[i].x, nodes_[i].y);
}

std::complex<double> DiskTransform::operator()(Vec2 xi) const {
  if (norm(xi) > envelope_ * (1.0 + 1e-12))
    throw error(errc::accuracy_envelope_exceeded,
                "‖ξ‖ = " + std::to_string(norm(xi)) + " exceeds the rule envelope " +
                    std::to_string(envelope_));
  std::vector<double> re(nodes_.size()), im(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double ph = dot(nodes_[i], xi);
    re[i] = weighted_[i] * std::cos(ph);
    im[i] = -weighted_[i] * std::sin(ph);
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

std::complex<double> transform(const BiPoly& u, Vec2 xi, int n_r, int n_t) {
  return DiskTransform(u, n_r, n_t)(xi);
}

const char* to_string(dual_form f) noexcept {
  return f == dual_form::displayed ? "displayed" : "disk_exact";
}

namespace {

using cplx = std::complex<double>;

struct Stencil {
  cplx v[5][5];  // v[a+2][b+2] at ξ + h(a, b)
};

Stencil sample(const DiskTransform& w, const CharacteristicSystem& sys, Vec2 xi, double h) {
  Stencil s;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (std::abs(a) + std::abs(b) > 2) {
        s.v[a + 2][b + 2] = 0.0;
        continue;
      }
      const Vec2 p{xi.x + a * h, xi.y + b * h};
      s.v[a + 2][b + 2] = sys.factored(p) * w(p);
    }
  return s;
}

cplx at(const Stencil& s, int a, int b) { return s.v[a + 2][b + 2]; }

cplx laplacian(const Stencil& s, double h) {
  return (at(s, 1, 0) + at(s, -1, 0) + at(s, 0, 1) + at(s, 0, -1) - 4.0 * at(s, 0, 0)) / (h * h);
}

// 13-point biharmonic stencil.
cplx biharmonic(const Stencil& s, double h) {
  const cplx axis1 = at(s, 1, 0) + at(s, -1, 0) + at(s, 0, 1) + at(s, 0, -1);
  const cplx diag = at(s, 1, 1) + at(s, 1, -1) + at(s, -1, 1) + at(s, -1, -1);
  const cplx axis2 = at(s, 2, 0) + at(s, -2, 0) + at(s, 0, 2) + at(s, 0, -2);
  return (20.0 * at(s, 0, 0) - 8.0 * axis1 + 2.0 * diag + axis2) / (h * h * h * h);
}

double stencil_max(const Stencil& s) {
  double m = 0.0;
  for (const auto& row : s.v)
    for (const cplx& z : row) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

DualResult dual_residual(const BiPoly& u, const CharacteristicSystem& sys,
                         const std::vector<Vec2>& xi_samples, double h, dual_form form, int n_r,
                         int n_t) {
  if (!(h > 0)) throw error(errc::precondition_violation, "stencil spacing h must be positive");
  const DiskTransform w(u, n_r, n_t);
  const DiskTransform w_ref(u, n_r + 16, n_t + 32);
  const BiPoly f = apply_L(sys, u);
  const BiPoly P = BiPoly::constant(1.0) - BiPoly::monomial(2, 0) - BiPoly::monomial(0, 2);
  const DiskTransform fhat(form == dual_form::displayed ? f : P * P * f, n_r, n_t);

  DualResult out;
  out.form = form;
  out.h = h;
  double eps_q = 0.0, vmax = 0.0;
  for (const Vec2& xi : xi_samples) {
    const Stencil s = sample(w, sys, xi, h);
    cplx lhs = biharmonic(s, h);
    if (form == dual_form::disk_exact) lhs += 2.0 * laplacian(s, h) + at(s, 0, 0);
    DualSample d;
    d.xi = xi;
    d.residual = std::abs(lhs - fhat(xi));
    d.stencil_max = stencil_max(s);
    d.relative = d.stencil_max > 0.0 ? d.residual / d.stencil_max : d.residual;
    out.max_residual = std::max(out.max_residual, d.residual);
    out.max_relative = std::max(out.max_relative, d.relative);
    eps_q = std::max(eps_q, std::abs(at(s, 0, 0) - sys.factored(xi) * w_ref(xi)));
    vmax = std::max(vmax, d.stencil_max);
    out.samples.push_back(d);
  }
  out.truncation_estimate = h * h * vmax;
  out.quadrature_estimate = 64.0 * eps_q / (h * h * h * h);
  return out;
}

std::vector<Vec2> default_xi_samples(double radius) {
  std::vector<Vec2> xs;
  for (int k = 0; k < 9; ++k) {
    const double t = two_pi * (k + 0.3) / 9.0;
    xs.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return xs;
}

std::vector<GoursatLine> goursat_check(const BiPoly& u, const CharacteristicSystem& sys, int n_line,
                                       double t_max, int n_r, int n_t) {
  if (n_line < 2) throw error(errc::precondition_violation, "need at least two line samples");
  const DiskTransform w(u, n_r, n_t);
  std::vector<GoursatLine> out;
  for (int j = 0; j < 4; ++j) {
    GoursatLine g;
    g.direction = j;
    for (int i = 0; i < n_line; ++i) {
      const double t = -t_max + 2.0 * t_max * i / (n_line - 1);
      const Vec2 xi = t * sys.normals[j];
      const cplx wv = w(xi);
      g.max_w = std::max(g.max_w, std::abs(wv));
      g.max_v = std::max(g.max_v, std::abs(sys.factored(xi) * wv));
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace qhyp
