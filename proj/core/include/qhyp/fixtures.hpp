#pragma once

// Named operators used by the test suite, the CLI `suite` command and the
// benchmarks.

#include <array>
#include <string>
#include <vector>

#include "qhyp/geometry.hpp"
#include "qhyp/symbol.hpp"

namespace qhyp {

struct NamedOperator {
  std::string name;
  QuarticSymbol symbol;
  CharacteristicSystem system;
  bool planted = false;  // built from angles with π-rational differences
};

// Five planted rational-angle systems.
std::vector<NamedOperator> rational_fixtures();
// Five integer-coefficient quartics with irrational angle differences.
std::vector<NamedOperator> irrational_fixtures();
// Rational first, then irrational.
std::vector<NamedOperator> fixture_suite();

// Planted angles with Δ = π/3 and Δ = π/4.
std::array<double, 4> angles_delta_pi_3();
std::array<double, 4> angles_delta_pi_4();

// (1, −2, −5, 6, 0): roots 0, 1, −2, 3. Δ = π/2 exactly, so the billiard has
// period 2, yet the pairwise angle differences are not π-rational and no
// Chebyshev ridge kernel exists.
NamedOperator period_two_irrational();

// Angles (π/8, 3π/8, 5π/8, 7π/8), Γ₀ = [−1, 1], apex (0, 1); characteristics 0
// and 3 through the apex, 2 through a, 1 through b.
CharacteristicSystem pentagon_fixture_system();
CharacteristicPentagon pentagon_fixture();

}  // namespace qhyp
