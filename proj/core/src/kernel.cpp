#include "qhyp/kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhyp/quadrature.hpp"

namespace qhyp {

namespace {

void require_q(int q) {
  if (q < 3) throw error(errc::precondition_violation, "Chebyshev degree q must be ≥ 3");
}

// T_n(s) and U_{n−1}(s) by recurrence.
std::pair<double, double> cheb_TU(int n, double s) {
  double t0 = 1.0, t1 = s;
  double u0 = 1.0, u1 = 2.0 * s;  // U_0, U_1
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double t2 = 2.0 * s * t1 - t0;
    t0 = t1, t1 = t2;
  }
  if (n == 1) return {t1, 1.0};
  for (int k = 2; k <= n - 1; ++k) {
    const double u2 = 2.0 * s * u1 - u0;
    u0 = u1, u1 = u2;
  }
  return {t1, u1};
}

double ridge_arg(const CharacteristicSystem& sys, int j, Vec2 x) { return -dot(sys.normals[j], x); }

}  // namespace

UniPoly ridge_profile(int q) {
  require_q(q);
  return (1.0 / (2.0 * q)) * chebyshev(q) - (1.0 / (2.0 * (q - 2))) * chebyshev(q - 2);
}

double ridge_profile_value(int q, double s) {
  require_q(q);
  return cheb_TU(q, s).first / (2.0 * q) - cheb_TU(q - 2, s).first / (2.0 * (q - 2));
}

double ridge_profile_derivative(int q, double s) {
  require_q(q);
  // T_n′ = n·U_{n−1}
  return 0.5 * cheb_TU(q, s).second - 0.5 * cheb_TU(q - 2, s).second;
}

BiPoly candidate(int q, const CharacteristicSystem& sys, const std::array<double, 4>& C) {
  const UniPoly g = ridge_profile(q);
  BiPoly u;
  for (int j = 0; j < 4; ++j)
    if (C[j] != 0.0) u += C[j] * compose_linear(g, -sys.normals[j]);
  return u;
}

double candidate_value(int q, const CharacteristicSystem& sys, const std::array<double, 4>& C, Vec2 x) {
  double s = 0.0;
  for (int j = 0; j < 4; ++j) s += C[j] * ridge_profile_value(q, ridge_arg(sys, j, x));
  return s;
}

double candidate_radial_derivative(int q, const CharacteristicSystem& sys,
                                   const std::array<double, 4>& C, Vec2 x) {
  // ∇g(−ãʲ·x) = −g′·ãʲ, so x·∇ gives g′(s)·s with s = −ãʲ·x.
  double d = 0.0;
  for (int j = 0; j < 4; ++j) {
    const double s = ridge_arg(sys, j, x);
    d += C[j] * ridge_profile_derivative(q, s) * s;
  }
  return d;
}

KernelResiduals certify(int q, const CharacteristicSystem& sys, const std::array<double, 4>& C,
                        const BiPoly& u, int n_circle, int grid) {
  KernelResiduals r;
  r.ridge_annihilated = true;
  for (int j = 0; j < 4; ++j)
    if (dot(sys.tangents[j], sys.normals[j]) != 0.0) r.ridge_annihilated = false;

  double l1 = 0.0;
  for (const auto& [e, c] : u.terms()) l1 += std::abs(c);
  const double denom = std::abs(sys.scale) * l1 * std::pow(static_cast<double>(q), 4);
  r.Lu_relative = denom > 0.0 ? max_abs_coeff(apply_L(sys, u)) / denom : 0.0;

  const auto circle = circle_quadrature(n_circle);
  for (const Vec2& x : circle.nodes) {
    r.boundary_u = std::max(r.boundary_u, std::abs(candidate_value(q, sys, C, x)));
    r.boundary_dnu = std::max(r.boundary_dnu, std::abs(candidate_radial_derivative(q, sys, C, x)));
  }
  for (int i = 0; i < grid; ++i)
    for (int k = 0; k < grid; ++k) {
      const Vec2 x{-1.0 + 2.0 * (i + 0.5) / grid, -1.0 + 2.0 * (k + 0.5) / grid};
      if (dot(x, x) >= 1.0) continue;
      r.interior_max = std::max(r.interior_max, std::abs(candidate_value(q, sys, C, x)));
    }
  const double b = std::max(r.boundary_u, r.boundary_dnu);
  r.scaled_boundary = r.interior_max > 0.0 ? b / r.interior_max : std::numeric_limits<double>::infinity();
  return r;
}

KernelScan solve_boundary_coefficients(int q, const CharacteristicSystem& sys, const KernelOptions& opt) {
  require_q(q);
  const int n = opt.n_samples > 0 ? opt.n_samples : std::max(8 * q, 128);
  if (n < 8 * q) throw error(errc::precondition_violation, "need n_samples ≥ 8q");

  Eigen::MatrixXd A(2 * n, 4);
  for (int i = 0; i < n; ++i) {
    const double t = two_pi * i / n;
    const Vec2 x{std::cos(t), std::sin(t)};
    for (int j = 0; j < 4; ++j) {
      const double s = ridge_arg(sys, j, x);
      A(i, j) = ridge_profile_value(q, s);
      A(n + i, j) = ridge_profile_derivative(q, s) * s;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();

  KernelScan scan;
  scan.q = q;
  scan.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double cut = opt.null_tol * sv[0];
  for (int k = 0; k < 4; ++k) {
    if (sv[0] > 0.0 && sv[k] > cut) continue;
    KernelSolution sol;
    sol.q = q;
    const Eigen::VectorXd c = svd.matrixV().col(k);
    // Deterministic sign: largest component positive.
    Eigen::Index imax = 0;
    c.cwiseAbs().maxCoeff(&imax);
    const double sign = c[imax] < 0 ? -1.0 : 1.0;
    for (int j = 0; j < 4; ++j) sol.C[j] = sign * c[j];
    sol.u = candidate(q, sys, sol.C);
    sol.residuals = certify(q, sys, sol.C, sol.u, opt.n_certify, opt.certify_grid);
    scan.solutions.push_back(std::move(sol));
  }
  return scan;
}

double gram_condition(const std::vector<KernelSolution>& sols, const CharacteristicSystem& sys) {
  if (sols.empty()) return 1.0;
  int qmax = 3;
  for (const auto& s : sols) qmax = std::max(qmax, s.q);
  const auto rule = disk_quadrature(std::max(32, qmax + 2), std::max(64, 4 * qmax + 4));
  const std::size_t m = sols.size(), n = rule.nodes.size();
  Eigen::MatrixXd V(n, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      V(i, a) = std::sqrt(rule.weights[i]) * candidate_value(sols[a].q, sys, sols[a].C, rule.nodes[i]);
  const Eigen::MatrixXd G = V.transpose() * V;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

FredholmReport fredholm_violation_check(const CharacteristicSystem& sys, const FredholmOptions& opt) {
  if (opt.q_max < 3) throw error(errc::precondition_violation, "q_max must be ≥ 3");
  FredholmReport rep;
  const BilliardMap map = BilliardMap::from_system(sys);
  rep.rational = rationality_test(map.phis, opt.rationality);
  rep.billiard = detect_period(map, opt.tau0, opt.period);
  for (int q = 3; q <= opt.q_max; ++q) {
    KernelScan scan = solve_boundary_coefficients(q, sys, opt.kernel);
    if (!scan.solutions.empty()) rep.kernel_degrees.push_back(q);
    rep.scans.push_back(std::move(scan));
  }
  rep.consistent = rep.kernel_degrees.empty() != rep.billiard.periodic();
  return rep;
}

}  // namespace qhyp
