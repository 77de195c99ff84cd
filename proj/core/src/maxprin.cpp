#include "qhyp/maxprin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace qhyp {

namespace {

// Top 53 bits to [0, 1); independent of the standard library's distributions.
double uniform_pm1(std::mt19937_64& gen) {
  const double u01 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return 2.0 * u01 - 1.0;
}

BoundaryRule gamma0_samples(const CharacteristicPentagon& p, int n) {
  const Vec2 a = p.vertices[0], b = p.vertices[4];
  BoundaryRule rule;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
    const double x = a.x + t * (b.x - a.x);
    rule.nodes.push_back({x, 0.0});
    rule.normals.push_back({0.0, -1.0});
    rule.weights.push_back((b.x - a.x) / std::max(1, n - 1) * (i == 0 || i == n - 1 ? 0.5 : 1.0));
    rule.labels.push_back(label_gamma0);
    rule.params.push_back(x);
  }
  return rule;
}

}  // namespace

BiPoly generate_candidate(const CharacteristicSystem& sys, std::uint64_t seed, int degree_bound) {
  if (degree_bound < 1) throw error(errc::precondition_violation, "degree bound must be ≥ 1");
  std::mt19937_64 gen(seed);
  BiPoly u;
  for (int j = 0; j < 4; ++j) {
    std::vector<double> c(static_cast<std::size_t>(degree_bound) + 1);
    for (auto& v : c) v = uniform_pm1(gen);
    u += compose_linear(UniPoly(std::move(c)), sys.normals[j]);
  }
  return u;
}

ExperimentInstance run_experiment(const CharacteristicSystem& sys, const CharacteristicPentagon& p,
                                  const BiPoly& u, int grid, int n_gamma0, const MaxprinTolerances& tol) {
  if (grid < 2 || n_gamma0 < 2) throw error(errc::precondition_violation, "grid sizes must be ≥ 2");
  ExperimentInstance e;
  e.u = u;
  e.f = apply_L(sys, u);
  e.gamma0_traces = tilde_traces(u, sys, gamma0_samples(p, n_gamma0));
  e.traces_nonnegative = sign_check(e.gamma0_traces, tol.trace_tol);

  const TraceSet edges = tilde_traces(u, sys, polygon_quadrature(p, 16).boundary);
  for (auto& m : e.edge_trace_minima) m.fill(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < edges.rule.size(); ++i) {
    const std::size_t edge = i / 16;
    for (int k = 0; k < 4; ++k) e.edge_trace_minima[edge][k] = std::min(e.edge_trace_minima[edge][k], edges.L[k][i]);
  }

  double lo_x = p.vertices[0].x, hi_x = lo_x, lo_y = p.vertices[0].y, hi_y = lo_y;
  for (const Vec2& v : p.vertices) {
    lo_x = std::min(lo_x, v.x), hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y), hi_y = std::max(hi_y, v.y);
  }
  e.f_nonpositive = true;
  e.interior_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i)
    for (int k = 0; k < grid; ++k) {
      const Vec2 x{lo_x + (hi_x - lo_x) * (i + 0.5) / grid, lo_y + (hi_y - lo_y) * (k + 0.5) / grid};
      if (!p.contains(x)) continue;
      ++e.interior_samples;
      const double uv = u(x.x, x.y);
      e.interior_max = std::max(e.interior_max, uv);
      e.scale = std::max(e.scale, std::abs(uv));
      if (e.f(x.x, x.y) > tol.f_tol) e.f_nonpositive = false;
    }
  e.hypothesis_ok = e.f_nonpositive && e.traces_nonnegative;
  e.verdict = !e.hypothesis_ok || e.interior_max <= tol.verdict_rel * e.scale;
  return e;
}

MaxprinReport run_seeded(const CharacteristicSystem& sys, const CharacteristicPentagon& p,
                         std::uint64_t first_seed, int count, int degree_bound, int grid,
                         const MaxprinTolerances& tol) {
  MaxprinReport rep;
  for (int s = 0; s < count; ++s) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(s);
    SeededInstance si{seed, run_experiment(sys, p, generate_candidate(sys, seed, degree_bound), grid, 65, tol)};
    if (si.instance.hypothesis_ok) ++rep.hypothesis_count;
    if (!si.instance.verdict) rep.counterexamples.push_back(seed);
    rep.instances.push_back(std::move(si));
  }
  return rep;
}

WaveDemo wave_demo(int n) {
  if (n < 16) throw error(errc::precondition_violation, "wave demo needs n ≥ 16");
  WaveDemo d;
  d.n = n;
  d.max = -std::numeric_limits<double>::infinity();
  d.values.resize(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      const double x = pi * i / n, t = pi * k / n;
      const double v = std::sin(x) * std::sin(t);
      d.values[static_cast<std::size_t>(i) * (n + 1) + k] = v;
      if (i == 0 || k == 0 || i == n || k == n) d.boundary_max_abs = std::max(d.boundary_max_abs, std::abs(v));
      if (v > d.max) {
        d.max = v;
        d.argmax_i = i, d.argmax_k = k;
        d.argmax_x = x, d.argmax_t = t;
      }
    }
  return d;
}

}  // namespace qhyp
