#include "qhyp/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qhyp/error.hpp"

namespace qhyp {

BilliardMap BilliardMap::from_system(const CharacteristicSystem& sys) {
  return from_angles(sys.phis);
}

BilliardMap BilliardMap::from_angles(std::array<double, 4> phis) {
  for (auto& p : phis) p = canonical_angle(p);
  std::sort(phis.begin(), phis.end());
  return {phis, phis[3] - phis[2] + phis[1] - phis[0]};
}

double wrap_angle(double tau) {
  double r = std::fmod(tau, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r -= two_pi;
  return r;
}

double circle_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, two_pi - d);
}

double step(const BilliardMap& map, int j, double tau) {
  if (j < 0 || j > 3) throw error(errc::precondition_violation, "characteristic index must be 0..3");
  return wrap_angle(2.0 * map.phis[j] - tau);
}

double john_map(const BilliardMap& map, double tau) { return wrap_angle(tau + 2.0 * map.delta); }

BilliardVerdict detect_period(const BilliardMap& map, double tau0, const PeriodOptions& opt) {
  if (opt.n_max < 1 || !(opt.tol > 0))
    throw error(errc::precondition_violation, "need n_max ≥ 1 and tol > 0");
  double tau = wrap_angle(tau0);
  for (int n = 1; n <= opt.n_max; ++n) {
    tau = john_map(map, tau);
    if (circle_distance(tau, tau0) <= opt.tol) return {n, opt.n_max};
  }
  return {std::nullopt, opt.n_max};
}

Orbit orbit(const BilliardMap& map, double tau0, const PeriodOptions& opt) {
  if (opt.n_max < 1 || !(opt.tol > 0))
    throw error(errc::precondition_violation, "need n_max ≥ 1 and tol > 0");
  Orbit o;
  o.verdict.n_max = opt.n_max;
  o.taus.push_back(wrap_angle(tau0));
  for (int n = 1; n <= opt.n_max; ++n) {
    o.taus.push_back(john_map(map, o.taus.back()));
    if (circle_distance(o.taus.back(), tau0) <= opt.tol) {
      o.verdict.period = n;
      break;
    }
  }
  return o;
}

namespace {

// Smallest q ≤ q_max with |x − p/q| ≤ tol for some integer p, scanning
// convergents and semiconvergents of the continued fraction of x.
std::optional<long long> min_denominator(double x, long long q_max, double tol) {
  if (std::abs(x - std::round(x)) <= tol) return 1;
  long long h2 = 0, h1 = 1, k2 = 1, k1 = 0;  // h_{n−2}, h_{n−1}, k_{n−2}, k_{n−1}
  double rest = x;
  for (int n = 0; n < 64; ++n) {
    const double a_f = std::floor(rest);
    if (a_f > 1e15) break;
    const long long a = static_cast<long long>(a_f);
    // semiconvergents (h2 + m·h1)/(k2 + m·k1), m = 1..a; m = a is the convergent
    const long long m_hi = k1 == 0 ? a : std::min(a, (q_max - k2) / k1);
    for (long long m = (n == 0 ? a : 1); m <= m_hi; ++m) {
      const long long h = h2 + m * h1, k = k2 + m * k1;
      if (k >= 1 && k <= q_max && std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol)
        return k;
    }
    const long long h = h2 + a * h1, k = k2 + a * k1;
    if (k > q_max) break;
    h2 = h1, h1 = h, k2 = k1, k1 = k;
    const double frac = rest - a_f;
    if (frac <= 0.0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RationalAngles> rationality_test(const std::array<double, 4>& phis,
                                               const RationalityOptions& opt) {
  if (opt.q_max < 1) throw error(errc::precondition_violation, "q_max must be ≥ 1");
  const double tol_x = opt.tol / pi;
  long long q = 1;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) {
      const auto qjk = min_denominator((phis[j] - phis[k]) / pi, opt.q_max, tol_x);
      if (!qjk) return std::nullopt;
      q = std::lcm(q, *qjk);
      if (q > opt.q_max) return std::nullopt;
    }
  RationalAngles out;
  out.q = q;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const double scaled = static_cast<double>(q) * (phis[j] - phis[k]) / pi;
      out.p[j][k] = std::llround(scaled);
      if (std::abs(phis[j] - phis[k] - pi * static_cast<double>(out.p[j][k]) / static_cast<double>(q)) >
          opt.tol)
        return std::nullopt;
    }
  return out;
}

}  // namespace qhyp
