#pragma once

// Characteristic billiard on the unit circle. A boundary point is identified
// with its angle τ; reflection along characteristic j sends τ to 2φⱼ − τ and
// the John map T = T₄∘T₃∘T₂∘T₁ is the rotation τ ↦ τ + 2Δ with
// Δ = φ₄ − φ₃ + φ₂ − φ₁.

#include <array>
#include <optional>
#include <vector>

#include "qhyp/symbol.hpp"

namespace qhyp {

struct BilliardMap {
  std::array<double, 4> phis{};  // ascending in [0, π)
  double delta = 0.0;

  static BilliardMap from_system(const CharacteristicSystem& sys);
  // Canonicalizes to [0, π) and sorts.
  static BilliardMap from_angles(std::array<double, 4> phis);
};

// Reduce to [0, 2π).
double wrap_angle(double tau);
// min(|a − b|, 2π − |a − b|) after wrapping.
double circle_distance(double a, double b);

// Reflection along characteristic j (0-based).
double step(const BilliardMap& map, int j, double tau);
double john_map(const BilliardMap& map, double tau);

struct BilliardVerdict {
  std::optional<int> period;  // empty: aperiodic up to n_max
  int n_max = 0;

  bool periodic() const { return period.has_value(); }
};

struct Orbit {
  std::vector<double> taus;  // taus[0] = τ₀, taus[k+1] = T(taus[k])
  BilliardVerdict verdict;
};

struct PeriodOptions {
  int n_max = 10000;
  double tol = 1e-9;
};

BilliardVerdict detect_period(const BilliardMap& map, double tau0, const PeriodOptions& opt = {});

// Iterates until the orbit closes (verdict Period(n), n+1 points) or n_max
// steps are taken.
Orbit orbit(const BilliardMap& map, double tau0, const PeriodOptions& opt = {});

// φⱼ − φₖ = π p[j][k] / q for a single q.
struct RationalAngles {
  std::array<std::array<long long, 4>, 4> p{};
  long long q = 1;
};

struct RationalityOptions {
  long long q_max = 10000;
  double tol = 1e-12;  // on the angle difference, radians
};

std::optional<RationalAngles> rationality_test(const std::array<double, 4>& phis,
                                               const RationalityOptions& opt = {});

}  // namespace qhyp
