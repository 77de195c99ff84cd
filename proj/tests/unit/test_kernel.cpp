#include <doctest.h>

#include "qhyp/fixtures.hpp"
#include "qhyp/kernel.hpp"
#include "support.hpp"

using namespace qhyp;

namespace {

// Boundary values of Σ Cⱼ g_q(−ãʲ·x) on the unit circle via T_q(cos α) =
// cos qα, where −ãʲ·x = cos αⱼ with αⱼ = θ − φⱼ + π/2.
std::pair<double, double> trig_boundary_max(const KernelSolution& s, const CharacteristicSystem& sys) {
  double u_max = 0.0, d_max = 0.0;
  const int q = s.q;
  for (int i = 0; i < 512; ++i) {
    const double theta = two_pi * i / 512;
    double u = 0.0, d = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double a = theta - sys.phis[j] + pi / 2;
      u += s.C[j] * (std::cos(q * a) / (2.0 * q) - std::cos((q - 2) * a) / (2.0 * (q - 2)));
      d += s.C[j] * std::cos((q - 1) * a) * std::cos(a);
    }
    u_max = std::max(u_max, std::abs(u));
    d_max = std::max(d_max, std::abs(d));
  }
  return {u_max, d_max};
}

}  // namespace

TEST_CASE("ridge profile derivative is T_{q−1}") {
  for (int q = 3; q <= 16; ++q) {
    const UniPoly g = ridge_profile(q);
    const UniPoly t = chebyshev(q - 1);
    const UniPoly d = g.derivative();
    for (int k = 0; k <= q; ++k) CHECK(std::abs(d[k] - t[k]) <= 1e-9 * (1 << q));
    for (double s = -1.0; s <= 1.0; s += 0.1) {
      CHECK(std::abs(ridge_profile_value(q, s) - g(s)) <= 1e-9);
      CHECK(std::abs(ridge_profile_derivative(q, s) - std::cos((q - 1) * std::acos(s))) <= 1e-12);
    }
  }
}

TEST_CASE("kernel exists exactly for periodic billiards on the fixture suite") {
  for (const auto& op : fixture_suite()) {
    const FredholmReport rep = fredholm_violation_check(op.system);
    INFO(op.name);
    CHECK(rep.consistent);
    CHECK(rep.billiard.periodic() == op.planted);
    CHECK(rep.kernel_degrees.empty() != op.planted);
    for (const auto& scan : rep.scans)
      for (const auto& s : scan.solutions) {
        CHECK(s.residuals.Lu_zero());
        CHECK(s.residuals.scaled_boundary <= 1e-9);
        const auto [bu, bd] = trig_boundary_max(s, op.system);
        CHECK(std::max(bu, bd) <= 1e-9 * s.residuals.interior_max);
        // Expanded polynomial against the ridge evaluation.
        const Vec2 x{0.3, -0.45};
        CHECK(std::abs(s.u(x.x, x.y) - candidate_value(s.q, op.system, s.C, x)) <= 1e-8);
        CHECK(max_abs_coeff(apply_coefficient_form(op.symbol, s.u)) <= 1e-9 * max_abs_coeff(s.u) * std::pow(s.q, 4));
      }
  }
}

TEST_CASE("eighths fixture has a degree-4 kernel solution") {
  const auto sys = rational_fixtures().front().system;
  const KernelScan s = solve_boundary_coefficients(4, sys);
  REQUIRE(s.solutions.size() == 1);
  double n = 0.0;
  for (double c : s.solutions[0].C) n += c * c;
  CHECK(std::abs(n - 1.0) <= 1e-12);
  CHECK(s.singular_values.back() <= 1e-9 * s.singular_values.front());
}

TEST_CASE("irrational fixtures keep a spectral gap") {
  for (const auto& op : irrational_fixtures())
    for (int q = 3; q <= 16; ++q) {
      const KernelScan s = solve_boundary_coefficients(q, op.system);
      CHECK(s.solutions.empty());
      CHECK(s.singular_values.back() > 1e-9 * s.singular_values.front());
    }
}

TEST_CASE("period-two operator without a kernel breaks the equivalence") {
  const FredholmReport rep = fredholm_violation_check(period_two_irrational().system);
  CHECK(rep.billiard.periodic());
  CHECK(rep.kernel_degrees.empty());
  CHECK_FALSE(rep.consistent);
}

TEST_CASE("kernel solutions are well separated in L²") {
  const auto op = rational_fixtures().front();
  const FredholmReport rep = fredholm_violation_check(op.system);
  std::vector<KernelSolution> all;
  for (const auto& scan : rep.scans) all.insert(all.end(), scan.solutions.begin(), scan.solutions.end());
  REQUIRE(all.size() >= 2);
  const double cond = gram_condition(all, op.system);
  CHECK(std::isfinite(cond));
  CHECK(cond >= 1.0);
}

TEST_CASE("degree preconditions") {
  const auto sys = pentagon_fixture_system();
  CHECK_THROWS_AS(ridge_profile(2), error);
  KernelOptions opt;
  opt.n_samples = 10;
  CHECK_THROWS_AS(solve_boundary_coefficients(8, sys, opt), error);
}
