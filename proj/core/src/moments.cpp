#include "qhyp/moments.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace qhyp {

std::array<double, 4> pairing_constants(const CharacteristicSystem& sys, int j) {
  if (j < 0 || j > 3) throw error(errc::precondition_violation, "characteristic index must be 0..3");
  std::array<double, 4> k{1.0, 0.0, 0.0, 0.0};
  for (int m = 1; m < 4; ++m) k[m] = k[m - 1] * -dot(sys.tangents[m - 1], sys.normals[j]);
  return k;
}

namespace {

// Q = T_k and its first three derivatives.
std::array<UniPoly, 4> chebyshev_derivatives(int k) {
  std::array<UniPoly, 4> d;
  d[0] = chebyshev(k);
  for (int m = 1; m < 4; ++m) d[m] = d[m - 1].derivative();
  return d;
}

double area_moment(const BiPoly& f, const QuadratureRule& area, const UniPoly& Q, Vec2 b) {
  return area.integrate([&](Vec2 x) { return f(x.x, x.y) * Q(dot(b, x)); });
}

void require_D(int D) {
  if (D < 0) throw error(errc::precondition_violation, "moment degree D must be nonnegative");
}

}  // namespace

std::vector<MomentRow> cauchy_compatibility_residuals(const BiPoly& f, const TraceSet& ts,
                                                      const CharacteristicSystem& sys,
                                                      const QuadratureRule& area, int D) {
  require_D(D);
  if (!ts.consistent()) throw error(errc::precondition_violation, "trace samples do not match their rule");
  std::vector<MomentRow> rows;
  std::vector<double> samples(ts.rule.size());
  for (int k = 0; k <= D; ++k) {
    const auto Qd = chebyshev_derivatives(k);
    for (int j = 0; j < 4; ++j) {
      const auto kap = pairing_constants(sys, j);
      const Vec2 b = -sys.normals[j];
      for (std::size_t i = 0; i < ts.rule.size(); ++i) {
        const double s = dot(b, ts.rule.nodes[i]);
        samples[i] = ts.L[3][i] * Qd[0](s) - kap[1] * ts.L[2][i] * Qd[1](s) +
                     kap[2] * ts.L[1][i] * Qd[2](s) - kap[3] * ts.L[0][i] * Qd[3](s);
      }
      MomentRow r{j, k};
      r.boundary = ts.rule.integrate_samples(samples);
      r.area = area_moment(f, area, Qd[0], b);
      r.residual = std::abs(r.boundary - r.area);
      rows.push_back(r);
    }
  }
  return rows;
}

FredholmResidual fredholm_residual(const BiPoly& f, const CharacteristicSystem& sys,
                                   const QuadratureRule& area, int D) {
  require_D(D);
  FredholmResidual out;
  for (int k = 0; k <= D; ++k) {
    const UniPoly Q = chebyshev(k);
    for (int j = 0; j < 4; ++j) {
      const double v = area_moment(f, area, Q, -sys.normals[j]);
      out.rows.push_back({j, k, v});
      out.max_abs = std::max(out.max_abs, std::abs(v));
    }
  }
  return out;
}

int trig_basis_size(int D_b) { return 2 * D_b + 1; }

double trig_basis(int m, double theta) {
  if (m == 0) return 1.0;
  const int k = (m + 1) / 2;
  return m % 2 == 1 ? std::cos(k * theta) : std::sin(k * theta);
}

std::vector<double> trig_project(const BoundaryRule& circle, std::span<const double> samples, int D_b) {
  if (samples.size() != circle.size())
    throw error(errc::precondition_violation, "sample count does not match circle rule");
  std::vector<double> c(trig_basis_size(D_b));
  std::vector<double> prod(samples.size());
  for (int m = 0; m < trig_basis_size(D_b); ++m) {
    for (std::size_t i = 0; i < samples.size(); ++i) prod[i] = samples[i] * trig_basis(m, circle.params[i]);
    c[m] = circle.integrate_samples(prod) / (m == 0 ? two_pi : pi);
  }
  return c;
}

std::vector<double> trig_evaluate(std::span<const double> coeffs, const BoundaryRule& circle) {
  std::vector<double> out(circle.size(), 0.0);
  for (std::size_t i = 0; i < circle.size(); ++i)
    for (std::size_t m = 0; m < coeffs.size(); ++m)
      out[i] += coeffs[m] * trig_basis(static_cast<int>(m), circle.params[i]);
  return out;
}

DirichletMoments solve_dirichlet_moments(const BiPoly& f, std::span<const double> L0,
                                         std::span<const double> L1, const CharacteristicSystem& sys,
                                         const BoundaryRule& circle, const QuadratureRule& area,
                                         const DirichletOptions& opt) {
  require_D(opt.D);
  if (opt.D_b < 0 || !(opt.rank_tol > 0))
    throw error(errc::precondition_violation, "need D_b ≥ 0 and rank_tol > 0");
  if (L0.size() != circle.size() || L1.size() != circle.size())
    throw error(errc::precondition_violation, "boundary data must be sampled on the circle rule");

  const int nb = trig_basis_size(opt.D_b);
  const int rows = 4 * (opt.D + 1), cols = 2 * nb;
  const std::size_t n = circle.size();

  // basis[m][i] = b_m(θᵢ)
  std::vector<std::vector<double>> basis(nb, std::vector<double>(n));
  for (int m = 0; m < nb; ++m)
    for (std::size_t i = 0; i < n; ++i) basis[m][i] = trig_basis(m, circle.params[i]);

  Eigen::MatrixXd G(rows, cols);
  Eigen::VectorXd rhs(rows);
  std::vector<double> tmp(n);
  int r = 0;
  for (int k = 0; k <= opt.D; ++k) {
    const auto Qd = chebyshev_derivatives(k);
    for (int j = 0; j < 4; ++j, ++r) {
      const auto kap = pairing_constants(sys, j);
      const Vec2 b = -sys.normals[j];
      std::array<std::vector<double>, 4> q;
      for (int d = 0; d < 4; ++d) {
        q[d].resize(n);
        for (std::size_t i = 0; i < n; ++i) q[d][i] = Qd[d](dot(b, circle.nodes[i]));
      }
      for (int m = 0; m < nb; ++m) {
        for (std::size_t i = 0; i < n; ++i) tmp[i] = basis[m][i] * q[0][i];
        G(r, m) = circle.integrate_samples(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = -kap[1] * basis[m][i] * q[1][i];
        G(r, nb + m) = circle.integrate_samples(tmp);
      }
      for (std::size_t i = 0; i < n; ++i) tmp[i] = kap[2] * L1[i] * q[2][i] - kap[3] * L0[i] * q[3][i];
      rhs[r] = area_moment(f, area, Qd[0], b) - circle.integrate_samples(tmp);
    }
  }
  // Equilibrate rows; T_k‴ grows like k⁶. Rows with no support on the unknowns
  // (κ₁ = 0 and k > D_b) carry only quadrature noise and are left unscaled.
  const double row_max = G.rowwise().norm().maxCoeff();
  for (int i = 0; i < rows; ++i) {
    const double s = G.row(i).norm();
    if (s > 1e-10 * row_max) {
      G.row(i) /= s;
      rhs[i] /= s;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  DirichletMoments out;
  out.rows = rows;
  out.cols = cols;
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() ? sv[0] : 0.0;
  const double smin = sv.size() ? sv[sv.size() - 1] : 0.0;
  out.rank_deficient = sv.size() < cols || smin <= opt.rank_tol * smax;

  // Minimum-norm least squares: pseudo-inverse truncated at rank_tol·σ_max.
  const Eigen::VectorXd utb = svd.matrixU().transpose() * rhs;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > opt.rank_tol * smax) y[i] = utb[i] / sv[i];
  const Eigen::VectorXd x = svd.matrixV() * y;
  out.residual_norm = (G * x - rhs).norm();
  out.L3.assign(x.data(), x.data() + nb);
  out.L2.assign(x.data() + nb, x.data() + cols);
  return out;
}

}  // namespace qhyp
