#include <doctest.h>

#include <numeric>
#include <random>

#include "qhyp/billiard.hpp"
#include "qhyp/fixtures.hpp"
#include "support.hpp"

using namespace qhyp;

namespace {

// Smallest q ≤ q_max with every pairwise difference within tol of πp/q, by
// trying each q in turn.
std::optional<long long> brute_force_q(const std::array<double, 4>& phis, long long q_max, double tol) {
  for (long long q = 1; q <= q_max; ++q) {
    bool all = true;
    for (int j = 0; j < 4 && all; ++j)
      for (int k = j + 1; k < 4 && all; ++k) {
        const double d = phis[k] - phis[j];
        const double p = std::round(d * q / pi);
        all = std::abs(d - pi * p / q) <= tol;
      }
    if (all) return q;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("planted Δ gives the expected period") {
  const auto m3 = BilliardMap::from_angles(angles_delta_pi_3());
  CHECK(std::abs(m3.delta - pi / 3) <= 1e-15);
  const auto v3 = detect_period(m3, 1.0);
  REQUIRE(v3.periodic());
  CHECK(*v3.period == 3);
  const auto v4 = detect_period(BilliardMap::from_angles(angles_delta_pi_4()), 0.3);
  REQUIRE(v4.periodic());
  CHECK(*v4.period == 4);
}

TEST_CASE("arctan system is aperiodic and not π-rational") {
  const auto sys = characteristic_system(QuarticSymbol{{1, 0, -5, 0, 4}});
  const auto map = BilliardMap::from_system(sys);
  const auto v = detect_period(map, 0.0, {10000, 1e-9});
  CHECK_FALSE(v.periodic());
  CHECK(v.n_max == 10000);
  CHECK_FALSE(rationality_test(map.phis, {10000, 1e-12}).has_value());
  CHECK_FALSE(brute_force_q(map.phis, 10000, 1e-12).has_value());
}

TEST_CASE("rationality test agrees with the brute-force scan") {
  for (const auto& op : fixture_suite()) {
    const auto r = rationality_test(op.system.phis, {10000, 1e-12});
    const auto b = brute_force_q(op.system.phis, 10000, 1e-12);
    CHECK(r.has_value() == b.has_value());
    CHECK(r.has_value() == op.planted);
    if (r && b) {
      CHECK(r->q == *b);
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          CHECK(std::abs(op.system.phis[j] - op.system.phis[k] - pi * r->p[j][k] / r->q) <= 1e-12);
    }
  }
}

TEST_CASE("period matches the order of Δ/π") {
  // Period is the least n with nΔ/π ∈ ℤ.
  for (const auto& op : rational_fixtures()) {
    const auto map = BilliardMap::from_system(op.system);
    const auto v = detect_period(map, 0.7);
    REQUIRE(v.periodic());
    int n = 1;
    while (std::abs(n * map.delta / pi - std::round(n * map.delta / pi)) > 1e-9) ++n;
    CHECK(*v.period == n);
  }
}

TEST_CASE("composite of the four reflections is the John map") {
  const auto map = BilliardMap::from_system(characteristic_system(QuarticSymbol{{1, 0, -5, 0, 4}}));
  std::mt19937_64 gen(29);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double tau = test::uniform(gen, 0.0, two_pi);
    double t = tau;
    for (int j = 0; j < 4; ++j) t = step(map, j, t);
    worst = std::max(worst, circle_distance(t, john_map(map, tau)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("each reflection is an involution") {
  const auto map = BilliardMap::from_angles(angles_delta_pi_4());
  for (double tau = 0.0; tau < two_pi; tau += 0.37)
    for (int j = 0; j < 4; ++j) CHECK(circle_distance(step(map, j, step(map, j, tau)), tau) <= 1e-14);
  CHECK_THROWS_AS(step(map, 4, 0.0), error);
}

TEST_CASE("orbit records the path and stops at the period") {
  const auto map = BilliardMap::from_angles(angles_delta_pi_3());
  const Orbit o = orbit(map, 1.0);
  REQUIRE(o.verdict.periodic());
  CHECK(o.taus.size() == 4);
  for (std::size_t k = 1; k < o.taus.size(); ++k)
    CHECK(circle_distance(o.taus[k], john_map(map, o.taus[k - 1])) <= 1e-15);
}

TEST_CASE("period-two operator with irrational angles") {
  const auto op = period_two_irrational();
  const auto map = BilliardMap::from_system(op.system);
  const auto v = detect_period(map, 0.4);
  REQUIRE(v.periodic());
  CHECK(*v.period == 2);
  CHECK_FALSE(rationality_test(map.phis).has_value());
}

TEST_CASE("wrap and distance") {
  CHECK(std::abs(wrap_angle(-0.5) - (two_pi - 0.5)) <= 1e-15);
  CHECK(wrap_angle(two_pi) == 0.0);
  CHECK(std::abs(circle_distance(0.1, two_pi - 0.1) - 0.2) <= 1e-15);
  CHECK_THROWS_AS(detect_period(BilliardMap::from_angles(angles_delta_pi_3()), 0.0, {0, 1e-9}), error);
}
