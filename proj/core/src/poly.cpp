#include "qhyp/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace qhyp {

double max_abs_coeff(const BiPoly& p) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c));
  return m;
}

BiPoly pruned(const BiPoly& p, double rel_tol) {
  const double cut = rel_tol * max_abs_coeff(p);
  BiPoly r;
  for (const auto& [e, c] : p.terms())
    if (std::abs(c) > cut) r.add_term(e, c);
  return r;
}

bool is_numerically_zero(const BiPoly& p, double abs_tol) { return max_abs_coeff(p) <= abs_tol; }

BiPoly apply_directional(const DirectionalOp& op, const BiPoly& p) {
  const Vec2 a = op.direction();
  return a.x * p.partial(0) + a.y * p.partial(1);
}

BiPoly apply_L(const CharacteristicSystem& sys, const BiPoly& p) {
  BiPoly r = p;
  for (int j = 3; j >= 0; --j) r = apply_directional(DirectionalOp(sys.tangents[j]), r);
  return sys.scale * r;
}

BiPoly apply_coefficient_form(const QuarticSymbol& sym, const BiPoly& p) {
  return apply_coefficient_form<double>(sym.a, p);
}

std::vector<RidgeTerm> kernel_Lplus_basis(const CharacteristicSystem& sys, int max_degree) {
  if (max_degree < 0)
    throw error(errc::precondition_violation, "kernel basis degree must be nonnegative");
  std::vector<RidgeTerm> out;
  for (int k = 0; k <= max_degree; ++k) {
    // Orthonormalized coefficient vectors of the degree-k homogeneous part
    // accepted so far; a direction is kept when it adds rank.
    std::vector<Eigen::VectorXd> accepted;
    for (int j = 0; j < 4; ++j) {
      const Vec2 b = -sys.normals[j];
      BiPoly ridge = compose_linear(UniPoly::monomial(k), b);
      Eigen::VectorXd v(k + 1);
      for (int i = 0; i <= k; ++i) v[i] = ridge.coeff(k - i, i);
      const double len0 = v.norm();
      for (const auto& q : accepted) v -= q.dot(v) * q;
      if (v.norm() <= 1e-9 * len0) continue;
      accepted.push_back(v.normalized());
      out.push_back({j, k, std::move(ridge)});
    }
  }
  return out;
}

}  // namespace qhyp
