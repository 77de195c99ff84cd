#include "qhyp/fixtures.hpp"

namespace qhyp {

namespace {

NamedOperator planted(std::string name, std::array<double, 4> phis) {
  return {std::move(name), from_angles(phis), system_from_angles(phis), true};
}

NamedOperator from_coeffs(std::string name, std::array<double, 5> a) {
  const QuarticSymbol sym{a};
  return {std::move(name), sym, characteristic_system(sym), false};
}

}  // namespace

std::vector<NamedOperator> rational_fixtures() {
  return {
      planted("rational_eighths", {pi / 8, 3 * pi / 8, 5 * pi / 8, 7 * pi / 8}),
      planted("rational_twelfths", {pi / 12, pi / 3, 7 * pi / 12, 2 * pi / 3}),
      planted("rational_sixths", {0.0, pi / 6, pi / 3, 2 * pi / 3}),
      planted("rational_tenths", {pi / 10, 3 * pi / 10, 7 * pi / 10, 9 * pi / 10}),
      planted("rational_sevenths", {pi / 7, 2 * pi / 7, 4 * pi / 7, 6 * pi / 7}),
  };
}

std::vector<NamedOperator> irrational_fixtures() {
  return {
      from_coeffs("roots_pm1_pm2", {1, 0, -5, 0, 4}),
      from_coeffs("roots_pm1_pm3", {1, 0, -10, 0, 9}),
      from_coeffs("roots_pm2_pm3", {1, 0, -13, 0, 36}),
      from_coeffs("roots_m1_m2_3_4", {1, -4, -7, 22, 24}),
      from_coeffs("roots_m1_2_m3_4", {1, -2, -13, 14, 24}),
  };
}

std::vector<NamedOperator> fixture_suite() {
  auto all = rational_fixtures();
  for (auto& op : irrational_fixtures()) all.push_back(std::move(op));
  return all;
}

std::array<double, 4> angles_delta_pi_3() { return {pi / 12, pi / 3, 7 * pi / 12, 2 * pi / 3}; }

std::array<double, 4> angles_delta_pi_4() { return {pi / 16, 3 * pi / 16, 5 * pi / 8, 3 * pi / 4}; }

NamedOperator period_two_irrational() { return from_coeffs("period_two_irrational", {1, -2, -5, 6, 0}); }

CharacteristicSystem pentagon_fixture_system() {
  return system_from_angles({pi / 8, 3 * pi / 8, 5 * pi / 8, 7 * pi / 8});
}

CharacteristicPentagon pentagon_fixture() {
  // Outer characteristics through the apex, inner ones through the ends: a
  // convex pentagon symmetric about x1 = 0.
  return pentagon({0.0, 1.0}, SegmentGamma0{-1.0, 1.0}, pentagon_fixture_system(),
                  PentagonAssignment{{0, 3}, {2, 1}});
}

}  // namespace qhyp
