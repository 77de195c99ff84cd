#include "qhyp/symbol.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qhyp/error.hpp"

namespace qhyp {

namespace {

using cplx = std::complex<double>;

// Ascending-power coefficients of the k-th derivative of Σ c[i] λ^i.
std::vector<double> derivative_coeffs(std::span<const double> c, int k) {
  std::vector<double> out(c.begin(), c.end());
  for (int d = 0; d < k; ++d) {
    if (out.size() <= 1) return {0.0};
    std::vector<double> next(out.size() - 1);
    for (std::size_t i = 1; i < out.size(); ++i) next[i - 1] = out[i] * static_cast<double>(i);
    out = std::move(next);
  }
  return out;
}

cplx horner(std::span<const double> c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double horner_bound(std::span<const double> c, double r) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

cplx newton_step(std::span<const double> c, cplx z) {
  const auto dc = derivative_coeffs(c, 1);
  const cplx p = horner(c, z);
  const cplx dp = horner(dc, z);
  if (std::abs(dp) == 0.0) return z;
  const cplx next = z - p / dp;
  return std::abs(horner(c, next)) <= std::abs(p) ? next : z;
}

}  // namespace

double QuarticSymbol::operator()(Vec2 xi) const {
  const double x = xi.x, y = xi.y;
  return a[0] * x * x * x * x + a[1] * x * x * x * y + a[2] * x * x * y * y + a[3] * x * y * y * y +
         a[4] * y * y * y * y;
}

double QuarticSymbol::max_abs_coeff() const {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

double CharacteristicSystem::factored(Vec2 xi) const {
  double p = scale;
  for (const auto& t : tangents) p *= dot(xi, t);
  return p;
}

const char* to_string(degeneracy d) noexcept {
  return d == degeneracy::complex_root ? "ComplexRoot" : "MultipleRoot";
}

double canonical_angle(double phi) {
  double r = std::fmod(phi, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) r -= pi;
  return r + 0.0;
}

std::array<cplx, 4> find_roots(const QuarticSymbol& sym, const SymbolTolerances& tol) {
  if (sym.a[0] == 0.0) throw error(errc::zero_leading_coefficient, "a0 must be nonzero");

  // ascending powers of the monic polynomial
  const std::array<double, 5> c = {sym.a[4] / sym.a[0], sym.a[3] / sym.a[0], sym.a[2] / sym.a[0],
                                   sym.a[1] / sym.a[0], 1.0};

  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < 4; ++i) companion(i, 3) = -c[i];
  Eigen::EigenSolver<Eigen::Matrix4d> solver(companion, false);
  std::array<cplx, 4> raw;
  for (int i = 0; i < 4; ++i) raw[i] = solver.eigenvalues()[i];

  // Single-linkage clusters of nearby eigenvalues.
  std::array<int, 4> group{0, 1, 2, 3};
  auto find = [&](int i) {
    while (group[i] != i) i = group[i];
    return i;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double r = tol.cluster_radius * (1.0 + std::max(std::abs(raw[i]), std::abs(raw[j])));
      if (std::abs(raw[i] - raw[j]) <= r) group[find(j)] = find(i);
    }

  std::array<cplx, 4> roots = raw;
  for (int g = 0; g < 4; ++g) {
    std::vector<int> members;
    for (int i = 0; i < 4; ++i)
      if (find(i) == g) members.push_back(i);
    if (members.empty()) continue;
    const int k = static_cast<int>(members.size());
    if (k == 1) {
      roots[members[0]] = newton_step(c, raw[members[0]]);
      continue;
    }
    // A k-fold root is a simple root of the (k−1)th derivative; the cluster
    // mean is accurate to O(eps) for it even when members are split by
    // O(eps^(1/k)).
    cplx mean = 0.0;
    for (int i : members) mean += raw[i];
    mean /= static_cast<double>(k);
    const auto dk = derivative_coeffs(c, k - 1);
    for (int it = 0; it < 3; ++it) mean = newton_step(dk, mean);
    bool multiple = true;
    for (int d = 0; d < k && multiple; ++d) {
      const auto dc = derivative_coeffs(c, d);
      const double bound = horner_bound(dc, std::abs(mean));
      multiple = std::abs(horner(dc, mean)) <= 1e-8 * std::max(bound, 1.0);
    }
    for (int i : members) roots[i] = multiple ? mean : newton_step(c, raw[i]);
  }

  // Exactly-real coefficients: snap negligible imaginary parts.
  for (auto& r : roots)
    if (std::abs(r.imag()) <= 1e-14 * (1.0 + std::abs(r.real()))) r = {r.real(), 0.0};

  std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

Classification classify(const QuarticSymbol& sym, const SymbolTolerances& tol) {
  const auto roots = find_roots(sym, tol);
  auto near_i = [](cplx z) {
    return std::abs(z - cplx(0, 1)) <= 1e-9 || std::abs(z + cplx(0, 1)) <= 1e-9;
  };

  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double gap = std::abs(roots[i] - roots[j]);
      if (gap <= tol.root_separation * (1.0 + std::abs(roots[i])))
        return Degenerate{degeneracy::multiple_root, roots[i], near_i(roots[i])};
    }
  for (const auto& r : roots)
    if (std::abs(r.imag()) > tol.real_tolerance * (1.0 + std::abs(r)))
      return Degenerate{degeneracy::complex_root, r, near_i(r)};

  CharacteristicSystem sys;
  std::array<std::pair<double, double>, 4> by_angle;
  for (int j = 0; j < 4; ++j) {
    const double lambda = roots[j].real();
    by_angle[j] = {canonical_angle(std::atan(-lambda)), lambda};
  }
  std::sort(by_angle.begin(), by_angle.end());
  double prod_cos = 1.0;
  for (int j = 0; j < 4; ++j) {
    const double phi = by_angle[j].first;
    sys.phis[j] = phi;
    sys.lambdas[j] = by_angle[j].second;
    sys.tangents[j] = {std::cos(phi), std::sin(phi)};
    sys.normals[j] = {-std::sin(phi), std::cos(phi)};
    prod_cos *= sys.tangents[j].x;
  }
  sys.scale = sym.a[0] / prod_cos;
  return Hyperbolic{sys};
}

CharacteristicSystem characteristic_system(const QuarticSymbol& sym, const SymbolTolerances& tol) {
  auto cls = classify(sym, tol);
  if (auto* h = std::get_if<Hyperbolic>(&cls)) return h->system;
  const auto& d = std::get<Degenerate>(cls);
  throw error(errc::not_hyperbolic, std::string(to_string(d.reason)) + " at " +
                                        std::to_string(d.root.real()) + "+" +
                                        std::to_string(d.root.imag()) + "i");
}

namespace {

std::array<double, 4> validated_angles(std::array<double, 4> phis, const SymbolTolerances& tol) {
  for (auto& p : phis) {
    p = canonical_angle(p);
    if (std::abs(p - pi / 2) <= tol.half_pi_guard)
      throw error(errc::angle_at_half_pi, "angle " + std::to_string(p) + " gives a0 = 0");
  }
  std::sort(phis.begin(), phis.end());
  for (int j = 0; j < 3; ++j)
    if (phis[j + 1] - phis[j] <= tol.duplicate_angle)
      throw error(errc::duplicate_angle, "angles " + std::to_string(phis[j]) + " and " +
                                             std::to_string(phis[j + 1]) + " coincide");
  if (pi - (phis[3] - phis[0]) <= tol.duplicate_angle)
    throw error(errc::duplicate_angle, "angles 0 and π describe the same line");
  return phis;
}

}  // namespace

QuarticSymbol from_angles(std::array<double, 4> phis, const SymbolTolerances& tol) {
  phis = validated_angles(phis, tol);
  // e[k] multiplies ξ1^(deg−k) ξ2^k while the product is built up factor by factor.
  std::array<double, 5> e{1.0, 0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    const double cj = std::cos(phis[j]), sj = std::sin(phis[j]);
    std::array<double, 5> next{};
    for (int k = 0; k <= j; ++k) {
      next[k] += e[k] * cj;
      next[k + 1] += e[k] * sj;
    }
    e = next;
  }
  QuarticSymbol sym;
  for (int k = 0; k < 5; ++k) sym.a[k] = e[k] / e[0];
  sym.a[0] = 1.0;
  return sym;
}

CharacteristicSystem system_from_angles(std::array<double, 4> phis, const SymbolTolerances& tol) {
  phis = validated_angles(phis, tol);
  CharacteristicSystem sys;
  double prod_cos = 1.0;
  for (int j = 0; j < 4; ++j) {
    sys.phis[j] = phis[j];
    sys.lambdas[j] = -std::tan(phis[j]);
    sys.tangents[j] = {std::cos(phis[j]), std::sin(phis[j])};
    sys.normals[j] = {-std::sin(phis[j]), std::cos(phis[j])};
    prod_cos *= sys.tangents[j].x;
  }
  sys.scale = 1.0 / prod_cos;
  return sys;
}

double factorization_residual(const CharacteristicSystem& sys, const QuarticSymbol& sym,
                              std::span<const Vec2> samples) {
  double worst = 0.0;
  for (const Vec2& xi : samples) {
    const double l = sym(xi);
    worst = std::max(worst, std::abs(l - sys.factored(xi)) / (1.0 + std::abs(l)));
  }
  return worst;
}

}  // namespace qhyp
