#include <doctest.h>

#include <algorithm>
#include <random>

#include "qhyp/fixtures.hpp"
#include "qhyp/symbol.hpp"
#include "support.hpp"

using namespace qhyp;

namespace {

// Coefficients of ∏(λ − rⱼ), highest power first.
std::array<double, 5> expand_roots(std::array<double, 4> r) {
  std::array<double, 5> c{1, 0, 0, 0, 0};
  for (int k = 0; k < 4; ++k)
    for (int i = k + 1; i >= 1; --i) c[i] -= r[k] * c[i - 1];
  return c;
}

}  // namespace

TEST_CASE("distinct real roots of a biquadratic") {
  const QuarticSymbol sym{{1, 0, -5, 0, 4}};
  const auto roots = find_roots(sym);
  const double want[4] = {-2, -1, 1, 2};
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(roots[k].real() - want[k]) <= 1e-12);
    CHECK(roots[k].imag() == 0.0);
  }
  CHECK(std::holds_alternative<Hyperbolic>(classify(sym)));
}

TEST_CASE("double root at ±i is degenerate") {
  const auto c = classify(QuarticSymbol{{1, 0, 2, 0, 1}});
  REQUIRE(std::holds_alternative<Degenerate>(c));
  const auto& d = std::get<Degenerate>(c);
  CHECK(d.reason == degeneracy::multiple_root);
  CHECK(d.at_plus_minus_i);
  CHECK(std::abs(std::abs(d.root.imag()) - 1.0) <= 1e-10);
  CHECK(std::abs(d.root.real()) <= 1e-10);
}

TEST_CASE("complex pair is degenerate") {
  const auto c = classify(QuarticSymbol{{1, 0, 0, 0, 1}});
  REQUIRE(std::holds_alternative<Degenerate>(c));
  CHECK(std::get<Degenerate>(c).reason == degeneracy::complex_root);
  CHECK_FALSE(std::get<Degenerate>(c).at_plus_minus_i);
}

TEST_CASE("double real root is degenerate") {
  const auto c = classify(QuarticSymbol{expand_roots({1, 1, -2, 3})});
  REQUIRE(std::holds_alternative<Degenerate>(c));
  CHECK(std::get<Degenerate>(c).reason == degeneracy::multiple_root);
}

TEST_CASE("zero leading coefficient is rejected") {
  try {
    find_roots(QuarticSymbol{{0, 1, 0, 0, 1}});
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::zero_leading_coefficient);
  }
  CHECK_THROWS_AS(characteristic_system(QuarticSymbol{{1, 0, 0, 0, 1}}), error);
}

TEST_CASE("roots of expanded products match the planted roots") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 4> r{};
    for (double& x : r) x = test::uniform(gen, -4, 4);
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end(), [](double a, double b) { return b - a < 0.05; }) != r.end())
      continue;
    const auto roots = find_roots(QuarticSymbol{expand_roots(r)});
    for (int k = 0; k < 4; ++k) CHECK(std::abs(roots[k].real() - r[k]) <= 1e-9 * (1 + std::abs(r[k])));
  }
}

TEST_CASE("characteristic system invariants") {
  for (const auto& op : fixture_suite()) {
    const CharacteristicSystem s = characteristic_system(op.symbol);
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(norm(s.tangents[j]) - 1) <= 1e-15);
      CHECK(std::abs(dot(s.tangents[j], s.normals[j])) <= 1e-15);
      CHECK(s.phis[j] >= 0.0);
      CHECK(s.phis[j] < pi);
      CHECK(std::abs(std::tan(s.phis[j]) + s.lambdas[j]) <= 1e-9 * (1 + std::abs(s.lambdas[j])));
      if (j) CHECK(s.phis[j - 1] < s.phis[j]);
    }
    std::vector<Vec2> xi;
    std::mt19937_64 gen(3);
    for (int k = 0; k < 32; ++k) xi.push_back({test::uniform(gen, -2, 2), test::uniform(gen, -2, 2)});
    CHECK(factorization_residual(s, op.symbol, xi) <= 1e-12);
  }
}

TEST_CASE("from_angles round trip") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::array<double, 4> phis{};
    for (double& p : phis) p = test::uniform(gen, 0.0, pi);
    std::sort(phis.begin(), phis.end());
    bool ok = std::abs(phis[0] - phis[1]) > 0.05 && std::abs(phis[1] - phis[2]) > 0.05 &&
              std::abs(phis[2] - phis[3]) > 0.05;
    for (double p : phis) ok = ok && std::abs(p - pi / 2) > 0.05;
    if (!ok) continue;
    const auto sys = characteristic_system(from_angles(phis));
    for (int j = 0; j < 4; ++j) CHECK(std::abs(sys.phis[j] - phis[j]) <= 1e-9);
    const auto direct = system_from_angles(phis);
    for (int j = 0; j < 4; ++j) CHECK(direct.phis[j] == canonical_angle(phis[j]));
  }
}

TEST_CASE("from_angles rejects π/2 and duplicates") {
  CHECK_THROWS_AS(from_angles({0.1, pi / 2, 2.0, 2.5}), error);
  CHECK_THROWS_AS(from_angles({0.1, 0.1, 2.0, 2.5}), error);
}

TEST_CASE("symbol evaluation matches the factored form") {
  const auto sys = system_from_angles(angles_delta_pi_3());
  const QuarticSymbol sym = from_angles(angles_delta_pi_3());
  for (int k = 0; k < 16; ++k) {
    const Vec2 xi{std::cos(0.4 * k) * (1 + 0.1 * k), std::sin(0.7 * k)};
    CHECK(std::abs(sym(xi) - sys.factored(xi)) <= 1e-12 * (1 + std::abs(sym(xi))));
  }
}
