#include <doctest.h>

#include <random>

#include "qhyp/fixtures.hpp"
#include "qhyp/moments.hpp"
#include "qhyp/traces.hpp"
#include "support.hpp"

using namespace qhyp;

namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Markov bound on the boundary integrand: |T_k^(m)| <= T_k^(m)(1) on [-1, 1].
double integrand_scale(const TraceSet& ts, int k) {
  double scale = 0.0, dk = 1.0;
  for (int m = 0; m < 4; ++m) {
    double peak = 0.0;
    for (double x : ts.L[3 - m]) peak = std::max(peak, std::abs(x));
    scale += dk * peak;
    dk *= double(k * k - m * m) / (2 * m + 1);
  }
  return scale;
}

}  // namespace

TEST_CASE("pairing constants are products of ⟨aᵐ, −ãʲ⟩") {
  const auto sys = pentagon_fixture_system();
  for (int j = 0; j < 4; ++j) {
    const auto k = pairing_constants(sys, j);
    CHECK(k[0] == 1.0);
    double prod = 1.0;
    for (int m = 1; m < 4; ++m) {
      prod *= dot(sys.tangents[m - 1], -sys.normals[j]);
      CHECK(std::abs(k[m] - prod) <= 1e-15);
    }
  }
}

TEST_CASE("Cauchy compatibility holds for manufactured solutions") {
  const BoundaryRule circle = circle_quadrature(512);
  const QuadratureRule disk = disk_quadrature(32, 64);
  std::mt19937_64 gen(61);
  for (const auto& op : fixture_suite()) {
    const BiPoly u = test::random_poly(gen, 6);
    const TraceSet ts = tilde_traces(u, op.system, circle);
    const auto rows = cauchy_compatibility_residuals(apply_L(op.system, u), ts, op.system, disk, 16);
    CHECK(rows.size() == 4 * 17);
    for (const auto& r : rows) CHECK(r.residual <= 1e-13 * two_pi * integrand_scale(ts, r.degree));
  }
}

TEST_CASE("moments of Lu vanish when all Cauchy data vanish") {
  const QuadratureRule disk = disk_quadrature(32, 64);
  std::mt19937_64 gen(67);
  for (const auto& op : fixture_suite()) {
    const BiPoly u = test::bubble(4) * test::random_poly(gen, 2);
    const BiPoly f = apply_L(op.system, u);
    double bound = 0.0;  // sup of |f| on the unit disk is at most the coefficient l1 norm
    for (const auto& [e, c] : f.terms()) bound += std::abs(c);
    CHECK(fredholm_residual(f, op.system, disk, 12).max_abs <= 1e-14 * pi * bound);
  }
}

TEST_CASE("trig basis projection round trip") {
  const BoundaryRule circle = circle_quadrature(512);
  CHECK(trig_basis_size(12) == 25);
  std::mt19937_64 gen(71);
  std::vector<double> c(25);
  for (double& x : c) x = test::uniform(gen, -1, 1);
  const auto samples = trig_evaluate(c, circle);
  CHECK(max_diff(trig_project(circle, samples, 12), c) <= 1e-13);
}

TEST_CASE("Dirichlet moments recover L3 and L2 of manufactured solutions") {
  const BoundaryRule circle = circle_quadrature(512);
  const QuadratureRule disk = disk_quadrature(32, 64);
  std::mt19937_64 gen(73);
  for (const auto& op : irrational_fixtures()) {
    for (int k = 0; k < 2; ++k) {
      const BiPoly u = test::random_poly(gen, 6);
      const TraceSet ts = tilde_traces(u, op.system, circle);
      const auto m = solve_dirichlet_moments(apply_L(op.system, u), ts.L[0], ts.L[1], op.system, circle, disk);
      CHECK_FALSE(m.rank_deficient);
      CHECK(max_diff(m.L3, trig_project(circle, ts.L[3], 12)) <= 1e-6);
      CHECK(max_diff(m.L2, trig_project(circle, ts.L[2], 12)) <= 1e-6);
    }
  }
}

TEST_CASE("homogeneous Dirichlet moments: unique on aperiodic, deficient on periodic") {
  const BoundaryRule circle = circle_quadrature(512);
  const QuadratureRule disk = disk_quadrature(32, 64);
  const std::vector<double> zero(circle.size(), 0.0);
  for (const auto& op : fixture_suite()) {
    const auto m = solve_dirichlet_moments(BiPoly{}, zero, zero, op.system, circle, disk);
    INFO(op.name);
    CHECK(m.rank_deficient == op.planted);
    double n = 0.0;
    for (double x : m.L3) n += x * x;
    for (double x : m.L2) n += x * x;
    CHECK(std::sqrt(n) <= 1e-8);
    const double ratio = m.singular_values.back() / m.singular_values.front();
    if (op.planted) CHECK(ratio <= 1e-8);
    else CHECK(ratio > 1e-8);
  }
}

TEST_CASE("too few test degrees leave the system deficient") {
  // The top L2 harmonics need test polynomials of degree D_b + 4.
  const BoundaryRule circle = circle_quadrature(512);
  const QuadratureRule disk = disk_quadrature(32, 64);
  const std::vector<double> zero(circle.size(), 0.0);
  const auto op = irrational_fixtures().front();
  CHECK(solve_dirichlet_moments(BiPoly{}, zero, zero, op.system, circle, disk, {12, 12, 1e-8}).rank_deficient);
  CHECK_FALSE(solve_dirichlet_moments(BiPoly{}, zero, zero, op.system, circle, disk, {16, 12, 1e-8}).rank_deficient);
}
