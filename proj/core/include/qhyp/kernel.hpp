#pragma once

// Polynomial solutions of Lu = 0 on the unit disk with u = u′ν = 0 on the
// circle, built from Chebyshev ridge profiles
//   g_q(s) = T_q(s)/(2q) − T_{q−2}(s)/(2(q−2)),  u = Σⱼ Cⱼ g_q(−ãʲ·x).

#include <array>
#include <optional>
#include <vector>

#include "qhyp/billiard.hpp"
#include "qhyp/poly.hpp"
#include "qhyp/symbol.hpp"

namespace qhyp {

UniPoly ridge_profile(int q);

// g_q(s) and g_q′(s) by the Chebyshev recurrences, stable for |s| ≤ 1.
double ridge_profile_value(int q, double s);
double ridge_profile_derivative(int q, double s);

// Expanded Σⱼ Cⱼ g_q(−ãʲ·x). Requires q ≥ 3.
BiPoly candidate(int q, const CharacteristicSystem& sys, const std::array<double, 4>& C);

// Ridge-form evaluation of the same function and of its radial derivative
// x·∇u (the outward normal derivative on the unit circle).
double candidate_value(int q, const CharacteristicSystem& sys, const std::array<double, 4>& C, Vec2 x);
double candidate_radial_derivative(int q, const CharacteristicSystem& sys,
                                   const std::array<double, 4>& C, Vec2 x);

struct KernelResiduals {
  bool ridge_annihilated = false;  // ⟨aʲ,ãʲ⟩ == 0 exactly for every j
  double Lu_relative = 0.0;        // max|coeff apply_L(u)| / (|c|·Σ|coeff u|·q⁴)
  double boundary_u = 0.0;         // max |u| at the circle samples
  double boundary_dnu = 0.0;       // max |u′ν| at the circle samples
  double interior_max = 0.0;       // max |u| on the interior grid
  double scaled_boundary = 0.0;    // max(boundary_u, boundary_dnu) / interior_max

  bool Lu_zero() const { return ridge_annihilated && Lu_relative <= 1e-12; }
};

struct KernelSolution {
  int q = 0;
  std::array<double, 4> C{};
  BiPoly u;
  KernelResiduals residuals;
};

KernelResiduals certify(int q, const CharacteristicSystem& sys, const std::array<double, 4>& C,
                        const BiPoly& u, int n_circle = 512, int grid = 64);

struct KernelScan {
  int q = 0;
  std::vector<double> singular_values;  // descending
  std::vector<KernelSolution> solutions;
};

struct KernelOptions {
  int n_samples = 0;         // 0 → max(8q, 128)
  double null_tol = 1e-9;    // relative to σ_max
  int n_certify = 512;
  int certify_grid = 64;
};

// Orthonormal basis of the numerical null space of the 2n×4 boundary matrix
// [u(θᵢ); u′ν(θᵢ)] as linear functions of C.
KernelScan solve_boundary_coefficients(int q, const CharacteristicSystem& sys,
                                       const KernelOptions& opt = {});

// Condition number of the disk L² Gram matrix of the solutions' u.
double gram_condition(const std::vector<KernelSolution>& sols, const CharacteristicSystem& sys);

struct FredholmReport {
  std::optional<RationalAngles> rational;
  BilliardVerdict billiard;
  std::vector<int> kernel_degrees;  // q with a nontrivial null space
  std::vector<KernelScan> scans;    // q = 3..q_max
  bool consistent = false;          // kernel found for some q ⇔ billiard periodic
};

struct FredholmOptions {
  int q_max = 16;
  KernelOptions kernel;
  PeriodOptions period;
  RationalityOptions rationality;
  double tau0 = 1.0;
};

FredholmReport fredholm_violation_check(const CharacteristicSystem& sys,
                                        const FredholmOptions& opt = {});

}  // namespace qhyp
