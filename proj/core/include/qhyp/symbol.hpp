#pragma once

// Quartic symbol L(ξ) = a0 ξ1⁴ + a1 ξ1³ξ2 + a2 ξ1²ξ2² + a3 ξ1ξ2³ + a4 ξ2⁴ of a
// constant-coefficient fourth-order operator in the plane, and its
// characteristic structure.

#include <array>
#include <complex>
#include <span>
#include <variant>

#include "qhyp/vec2.hpp"

namespace qhyp {

struct QuarticSymbol {
  std::array<double, 5> a{};

  double operator()(Vec2 xi) const;
  double max_abs_coeff() const;
};

struct SymbolTolerances {
  double root_separation = 1e-10;  // roots closer than this are one root
  double real_tolerance = 1e-10;   // |Im λ| below this counts as real
  double half_pi_guard = 1e-6;     // from_angles rejects |φ − π/2| below this
  double duplicate_angle = 1e-10;
  double cluster_radius = 1e-4;    // eigenvalue clusters merged before refinement
};

// Characteristic data, indexed by ascending angle φ ∈ [0, π).
// lambdas[j] = −tan(phis[j]); tangents[j] = (cos φ, sin φ) is the line
// direction aʲ; normals[j] = (−sin φ, cos φ) is ãʲ; L(ξ) = scale·∏⟨ξ, aʲ⟩.
struct CharacteristicSystem {
  std::array<double, 4> lambdas{};
  std::array<double, 4> phis{};
  std::array<Vec2, 4> tangents{};
  std::array<Vec2, 4> normals{};
  double scale = 1.0;

  // scale·∏⟨ξ, aʲ⟩
  double factored(Vec2 xi) const;
};

enum class degeneracy { complex_root, multiple_root };

struct Degenerate {
  degeneracy reason;
  std::complex<double> root;
  // Real coefficients put ±i in a conjugate pair, so a ±i root is reported as
  // complex_root or multiple_root with this flag set.
  bool at_plus_minus_i = false;
};

struct Hyperbolic {
  CharacteristicSystem system;
};

using Classification = std::variant<Hyperbolic, Degenerate>;

const char* to_string(degeneracy d) noexcept;

// Roots of a0λ⁴ + a1λ³ + a2λ² + a3λ + a4, sorted by (real, imag). Multiple
// roots are repeated. Throws errc::zero_leading_coefficient when a0 = 0.
std::array<std::complex<double>, 4> find_roots(const QuarticSymbol& sym,
                                               const SymbolTolerances& tol = {});

Classification classify(const QuarticSymbol& sym, const SymbolTolerances& tol = {});

// classify() that throws errc::not_hyperbolic for degenerate symbols.
CharacteristicSystem characteristic_system(const QuarticSymbol& sym,
                                           const SymbolTolerances& tol = {});

// Symbol ∏⟨ξ, (cos φⱼ, sin φⱼ)⟩ normalized to a0 = 1.
QuarticSymbol from_angles(std::array<double, 4> phis, const SymbolTolerances& tol = {});

// The characteristic system of from_angles(phis), built directly from the
// angles so planted angles are preserved bit-for-bit (after reduction mod π).
CharacteristicSystem system_from_angles(std::array<double, 4> phis,
                                        const SymbolTolerances& tol = {});

// max over samples of |L(ξ) − c∏⟨ξ,aʲ⟩| / (1 + |L(ξ)|)
double factorization_residual(const CharacteristicSystem& sys, const QuarticSymbol& sym,
                              std::span<const Vec2> samples);

// Reduce an angle to [0, π).
double canonical_angle(double phi);

}  // namespace qhyp
