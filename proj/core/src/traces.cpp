#include "qhyp/traces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qhyp {

bool TraceSet::consistent() const {
  const std::size_t n = rule.size();
  return std::all_of(L.begin(), L.end(), [n](const auto& s) { return s.size() == n; });
}

namespace {

BiPoly directional(const CharacteristicSystem& sys, int j, const BiPoly& p) {
  return apply_directional(DirectionalOp(sys.tangents[j]), p);
}

// D_{5−k}···D₄u for k = 0..3 (k = 0 is u itself).
std::array<BiPoly, 4> trace_chain(const BiPoly& u, const CharacteristicSystem& sys) {
  std::array<BiPoly, 4> w;
  w[0] = u;
  for (int k = 1; k < 4; ++k) w[k] = directional(sys, 4 - k, w[k - 1]);
  return w;
}

}  // namespace

TraceSet tilde_traces(const BiPoly& u, const CharacteristicSystem& sys, const BoundaryRule& rule) {
  const auto w = trace_chain(u, sys);
  TraceSet ts;
  ts.rule = rule;
  for (int k = 0; k < 4; ++k) {
    const Vec2 a = sys.tangents[3 - k];
    auto& out = ts.L[k];
    out.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const Vec2 x = rule.nodes[i];
      out[i] = sys.scale * dot(rule.normals[i], a) * w[k](x.x, x.y);
    }
  }
  return ts;
}

std::array<BiPoly, 4> adjoint_pairings(const BiPoly& v, const CharacteristicSystem& sys) {
  std::array<BiPoly, 4> p;
  p[0] = v;
  for (int m = 1; m < 4; ++m) p[m] = directional(sys, m - 1, p[m - 1]);
  return p;
}

GreenResidual green_identity_residual(const BiPoly& u, const BiPoly& v,
                                      const CharacteristicSystem& sys, const QuadratureRule& area,
                                      const BoundaryRule& boundary) {
  const BiPoly Lu = apply_L(sys, u), Lv = apply_L(sys, v);
  GreenResidual r;
  r.lhs = area.integrate([&](Vec2 x) { return Lu(x.x, x.y) * v(x.x, x.y) - u(x.x, x.y) * Lv(x.x, x.y); });

  const TraceSet ts = tilde_traces(u, sys, boundary);
  const auto P = adjoint_pairings(v, sys);
  std::vector<double> samples(boundary.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const Vec2 x = boundary.nodes[i];
    samples[i] = ts.L[3][i] * P[0](x.x, x.y) - ts.L[2][i] * P[1](x.x, x.y) +
                 ts.L[1][i] * P[2](x.x, x.y) - ts.L[0][i] * P[3](x.x, x.y);
  }
  r.rhs = boundary.integrate_samples(samples);
  r.relative = std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs));
  return r;
}

double characteristic_edge_trace_max(const TraceSet& ts) {
  double m = 0.0;
  for (std::size_t i = 0; i < ts.rule.size(); ++i) {
    const int j = ts.rule.labels[i];
    if (j < 0 || j > 3) continue;
    m = std::max(m, std::abs(ts.L[3 - j][i]));
  }
  return m;
}

bool sign_check(const TraceSet& ts, double tol) {
  for (const auto& s : ts.L)
    for (double v : s)
      if (v < -tol) return false;
  return true;
}

std::array<double, 4> trace_minima(const TraceSet& ts, int label) {
  std::array<double, 4> m;
  m.fill(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < ts.rule.size(); ++i) {
    if (label != label_plain && ts.rule.labels[i] != label) continue;
    for (int k = 0; k < 4; ++k) m[k] = std::min(m[k], ts.L[k][i]);
  }
  return m;
}

CauchyTable cauchy_table(const CharacteristicSystem& sys, double n2) {
  if (n2 != 1.0 && n2 != -1.0) throw error(errc::unsupported_curve, "flat boundary normal must be (0, ±1)");
  const Vec2 nu{0.0, n2};
  CauchyTable table;
  for (int k = 0; k < 4; ++k) {
    // Expand D_{5−k}···D₄ as Σ e[a][b] ∂1^a ∂2^b.
    std::vector<std::vector<double>> e(k + 1, std::vector<double>(k + 1, 0.0));
    e[0][0] = 1.0;
    for (int step = 0; step < k; ++step) {
      const Vec2 d = sys.tangents[3 - step];
      std::vector<std::vector<double>> next(k + 1, std::vector<double>(k + 1, 0.0));
      for (int a = 0; a <= step; ++a)
        for (int b = 0; a + b <= step; ++b) {
          next[a + 1][b] += d.x * e[a][b];
          next[a][b + 1] += d.y * e[a][b];
        }
      e = std::move(next);
    }
    const double front = sys.scale * dot(nu, sys.tangents[3 - k]);
    for (int a = 0; a <= k; ++a) {
      const int b = k - a;
      // ∂2^b = n2^b ∂ν^b on x2 = 0
      const double c = front * e[a][b] * (b % 2 == 1 ? n2 : 1.0);
      if (c != 0.0) table[k].push_back({b, a, c});
    }
  }
  return table;
}

CauchyData extract_cauchy_data(const BiPoly& u, double n2) {
  if (n2 != 1.0 && n2 != -1.0) throw error(errc::unsupported_curve, "flat boundary normal must be (0, ±1)");
  std::array<UniPoly, 4> data;
  BiPoly d = u;
  double sign = 1.0;
  for (int b = 0; b < 4; ++b) {
    int deg = 0;
    for (const auto& [ex, c] : d.terms())
      if (ex.j == 0) deg = std::max(deg, ex.i);
    std::vector<double> coeffs(static_cast<std::size_t>(deg) + 1, 0.0);
    for (const auto& [ex, c] : d.terms())
      if (ex.j == 0) coeffs[ex.i] = sign * c;
    data[b] = UniPoly(std::move(coeffs));
    d = d.partial(1);
    sign *= n2;
  }
  return {data[0], data[1], data[2], data[3]};
}

TraceSet traces_from_cauchy(const CauchyData& cd, const CharacteristicSystem& sys,
                            const BoundaryRule& rule) {
  if (rule.size() == 0) throw error(errc::unsupported_curve, "empty boundary rule");
  const double n2 = rule.normals[0].y;
  for (std::size_t i = 0; i < rule.size(); ++i)
    if (rule.nodes[i].y != 0.0 || rule.normals[i].x != 0.0 || rule.normals[i].y != n2 ||
        std::abs(n2) != 1.0)
      throw error(errc::unsupported_curve, "Cauchy traces need the flat boundary x2 = 0");

  const CauchyTable table = cauchy_table(sys, n2);
  // derivs[b][a] = (d/dx1)^a datum_b
  const std::array<UniPoly, 4> data{cd.phi, cd.psi, cd.sigma, cd.chi};
  std::array<std::array<UniPoly, 4>, 4> derivs;
  for (int b = 0; b < 4; ++b) {
    derivs[b][0] = data[b];
    for (int a = 1; a < 4; ++a) derivs[b][a] = derivs[b][a - 1].derivative();
  }
  TraceSet ts;
  ts.rule = rule;
  for (int k = 0; k < 4; ++k) {
    ts.L[k].assign(rule.size(), 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      double s = 0.0;
      for (const CauchyTerm& t : table[k]) s += t.coeff * derivs[t.datum][t.order](rule.nodes[i].x);
      ts.L[k][i] = s;
    }
  }
  return ts;
}

std::vector<double> wave_L1_trace(const BiPoly& u, const BoundaryRule& circle) {
  const BiPoly u1 = u.partial(0), u2 = u.partial(1);
  std::vector<double> out(circle.size());
  for (std::size_t i = 0; i < circle.size(); ++i) {
    const double x = circle.nodes[i].x, y = circle.nodes[i].y;
    const double du_nu = x * u1(x, y) + y * u2(x, y);
    const double du_tau = -y * u1(x, y) + x * u2(x, y);
    const double L = x * y, L_tau = x * x - y * y, L_tautau = -4.0 * x * y;
    out[i] = L * du_nu + L_tau * du_tau + 0.5 * L_tautau * u(x, y);
  }
  return out;
}

std::vector<double> wave_L0_trace(const BiPoly& u, const BoundaryRule& circle) {
  std::vector<double> out(circle.size());
  for (std::size_t i = 0; i < circle.size(); ++i) {
    const double x = circle.nodes[i].x, y = circle.nodes[i].y;
    out[i] = -x * y * u(x, y);
  }
  return out;
}

std::vector<double> wave_L1_trace_fd(const BiPoly& u, const BoundaryRule& circle, double h) {
  auto d1 = [h](auto&& g) {
    return (-g(2 * h) + 8 * g(h) - 8 * g(-h) + g(-2 * h)) / (12 * h);
  };
  auto d2 = [h](auto&& g) {
    return (-g(2 * h) + 16 * g(h) - 30 * g(0.0) + 16 * g(-h) - g(-2 * h)) / (12 * h * h);
  };
  std::vector<double> out(circle.size());
  for (std::size_t i = 0; i < circle.size(); ++i) {
    const double t = std::atan2(circle.nodes[i].y, circle.nodes[i].x);
    auto on_circle = [&](auto&& f) {
      return [&, f](double dt) { return f(std::cos(t + dt), std::sin(t + dt)); };
    };
    auto u_at = [&](double x, double y) { return u(x, y); };
    auto L_at = [](double x, double y) { return x * y; };
    auto radial = [&](double dr) { return u((1.0 + dr) * std::cos(t), (1.0 + dr) * std::sin(t)); };
    const double L = L_at(std::cos(t), std::sin(t));
    out[i] = L * d1(radial) + d1(on_circle(L_at)) * d1(on_circle(u_at)) +
             0.5 * d2(on_circle(L_at)) * u(std::cos(t), std::sin(t));
  }
  return out;
}

}  // namespace qhyp
