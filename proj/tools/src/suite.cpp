#include <algorithm>
#include <cmath>

#include "commands.hpp"
#include "qhyp/billiard.hpp"
#include "qhyp/cli/io.hpp"
#include "qhyp/duality.hpp"
#include "qhyp/fixtures.hpp"
#include "qhyp/kernel.hpp"
#include "qhyp/maxprin.hpp"
#include "qhyp/moments.hpp"
#include "qhyp/quadrature.hpp"
#include "qhyp/traces.hpp"

namespace qhyp::cli {

using json = nlohmann::json;

namespace {

const std::vector<std::string> all_checks{"symbol", "billiard", "kernel", "traces", "moments", "duality"};

// Fixed test polynomial for the trace and moment checks: u = (1 − r²)·(x1 + 2x2²) + x1³x2.
BiPoly suite_u() {
  const BiPoly x = BiPoly::x1(), y = BiPoly::x2();
  const BiPoly bubble = BiPoly::constant(1.0) - x * x - y * y;
  return bubble * (x + BiPoly::constant(2.0) * y * y) + x * x * x * y;
}

BiPoly suite_v() {
  const BiPoly x = BiPoly::x1(), y = BiPoly::x2();
  return x * x * y + BiPoly::constant(0.5) * y * y * y * y - x;
}

struct CheckOutcome {
  bool passed = false;
  json result;
};

struct FixtureState {
  std::optional<KernelSolution> kernel_solution;
};

CheckOutcome check_symbol(const NamedOperator& op, const RunConfig& cfg) {
  const auto tol = symbol_tolerances(cfg);
  const Classification c = classify(op.symbol, tol);
  CheckOutcome o;
  o.result["coeffs"] = op.symbol.a;
  if (const auto* h = std::get_if<Hyperbolic>(&c)) {
    std::vector<Vec2> samples;
    for (int k = 0; k < 64; ++k) samples.push_back({std::cos(two_pi * k / 64), std::sin(two_pi * k / 64)});
    const double res = factorization_residual(h->system, op.symbol, samples);
    o.result["classification"] = "Hyperbolic";
    o.result["angles"] = h->system.phis;
    o.result["factorization_residual"] = res;
    o.passed = res <= 1e-10;
  } else {
    o.result["classification"] = "Degenerate";
  }
  return o;
}

CheckOutcome check_billiard(const NamedOperator& op, const RunConfig& cfg) {
  const BilliardMap map = BilliardMap::from_system(op.system);
  const auto verdict = detect_period(map, 1.0, {cfg.n_max, cfg.period_tol});
  const auto rat = rationality_test(map.phis, {cfg.Q_max, cfg.rational_tol});
  CheckOutcome o;
  o.result["delta_over_pi"] = map.delta / pi;
  o.result["verdict"] = verdict.periodic() ? "Period" : "Aperiodic";
  o.result["period"] = verdict.period ? json(*verdict.period) : json(nullptr);
  o.result["rational_q"] = rat ? json(rat->q) : json(nullptr);
  // Planted fixtures have π-rational angles; the integer quartics do not.
  o.passed = op.planted ? (verdict.periodic() && rat.has_value()) : (!verdict.periodic() && !rat);
  return o;
}

CheckOutcome check_kernel(const NamedOperator& op, const RunConfig& cfg, FixtureState& st) {
  FredholmOptions opt;
  opt.q_max = cfg.q_max;
  opt.kernel.null_tol = cfg.null_tol;
  opt.kernel.n_certify = cfg.n_circle;
  opt.kernel.certify_grid = cfg.grid;
  opt.period = {cfg.n_max, cfg.period_tol};
  opt.rationality = {cfg.Q_max, cfg.rational_tol};
  const FredholmReport rep = fredholm_violation_check(op.system, opt);
  CheckOutcome o;
  double worst_boundary = 0.0;
  bool lu_zero = true;
  json sols = json::array();
  for (const auto& s : rep.scans)
    for (const auto& sol : s.solutions) {
      if (!st.kernel_solution) st.kernel_solution = sol;
      worst_boundary = std::max(worst_boundary, sol.residuals.scaled_boundary);
      lu_zero = lu_zero && sol.residuals.Lu_zero();
      sols.push_back({{"q", sol.q}, {"C", sol.C}, {"scaled_boundary", sol.residuals.scaled_boundary}});
    }
  o.result["kernel_degrees"] = rep.kernel_degrees;
  o.result["billiard"] = rep.billiard.periodic() ? "Period" : "Aperiodic";
  o.result["consistent"] = rep.consistent;
  o.result["solutions"] = sols;
  o.result["max_scaled_boundary"] = worst_boundary;
  o.passed = rep.consistent && lu_zero && worst_boundary <= 1e-9;
  return o;
}

CheckOutcome check_traces(const NamedOperator& op, const RunConfig& cfg) {
  const BoundaryRule circle = circle_quadrature(cfg.n_circle);
  const QuadratureRule disk = disk_quadrature(cfg.n_r, cfg.n_t);
  const GreenResidual g = green_identity_residual(suite_u(), suite_v(), op.system, disk, circle);
  CheckOutcome o;
  o.result["green_disk"] = {{"lhs", g.lhs}, {"rhs", g.rhs}, {"relative", g.relative}};
  o.passed = g.relative <= 1e-8;
  return o;
}

CheckOutcome check_moments(const NamedOperator& op, const RunConfig& cfg) {
  const BiPoly u = suite_u();
  const BiPoly f = apply_L(op.system, u);
  const BoundaryRule circle = circle_quadrature(cfg.n_circle);
  const QuadratureRule disk = disk_quadrature(cfg.n_r, cfg.n_t);
  const TraceSet ts = tilde_traces(u, op.system, circle);
  const auto rows = cauchy_compatibility_residuals(f, ts, op.system, disk, cfg.D);
  double worst = 0.0, scale = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.residual);
    scale = std::max(scale, std::abs(r.area));
  }
  const auto hom = solve_dirichlet_moments(BiPoly{}, std::vector<double>(circle.size(), 0.0),
                                           std::vector<double>(circle.size(), 0.0), op.system, circle, disk,
                                           {cfg.D, cfg.D_b, cfg.lsq_rank_tol});
  const double ratio = hom.singular_values.back() / hom.singular_values.front();
  CheckOutcome o;
  o.result["cauchy_max_residual"] = worst;
  o.result["cauchy_max_area_term"] = scale;
  o.result["homogeneous_rank_deficient"] = hom.rank_deficient;
  o.result["homogeneous_sigma_ratio"] = ratio;
  o.passed = worst <= 1e-8 * std::max(1.0, scale) && hom.rank_deficient == op.planted;
  return o;
}

CheckOutcome check_duality(const NamedOperator& op, const RunConfig& cfg, const FixtureState& st) {
  CheckOutcome o;
  if (!st.kernel_solution) {
    o.result["skipped"] = "no kernel solution";
    o.passed = true;
    return o;
  }
  const auto& sol = *st.kernel_solution;
  std::vector<Vec2> xs;
  for (int k = 0; k < cfg.xi_count; ++k) {
    const double t = two_pi * (k + 0.3) / cfg.xi_count;
    xs.push_back({cfg.xi_radius * std::cos(t), cfg.xi_radius * std::sin(t)});
  }
  const auto shown = dual_residual(sol.u, op.system, xs, cfg.h, dual_form::displayed, cfg.dual_n_r, cfg.dual_n_t);
  const auto exact = dual_residual(sol.u, op.system, xs, cfg.h, dual_form::disk_exact, cfg.dual_n_r, cfg.dual_n_t);
  o.result["q"] = sol.q;
  o.result["displayed_max_relative"] = shown.max_relative;
  o.result["disk_exact_max_relative"] = exact.max_relative;
  o.result["displayed_ok"] = shown.max_relative <= 1e-4;
  o.result["disk_exact_ok"] = exact.max_relative <= 1e-4;
  o.passed = shown.max_relative <= 1e-4;
  return o;
}

}  // namespace

int cmd_suite(const Context& ctx, const SuiteArgs& a) {
  std::vector<std::string> checks;
  if (a.run == "all") {
    checks = all_checks;
  } else {
    if (std::find(all_checks.begin(), all_checks.end(), a.run) == all_checks.end() && a.run != "maxprin")
      throw input_error("--run must be all, maxprin or one of symbol, billiard, kernel, traces, moments, duality");
    checks = {a.run};
    if (a.run == "duality") checks = {"kernel", "duality"};
  }

  Context sub = ctx;
  sub.out_dir = ctx.out_dir / "suite";
  json table = json::array();
  int failures = 0;
  for (const auto& op : fixture_suite()) {
    FixtureState st;
    json row{{"fixture", op.name}, {"planted", op.planted}};
    for (const auto& check : checks) {
      CheckOutcome o;
      if (check == "symbol") o = check_symbol(op, ctx.cfg);
      else if (check == "billiard") o = check_billiard(op, ctx.cfg);
      else if (check == "kernel") o = check_kernel(op, ctx.cfg, st);
      else if (check == "traces") o = check_traces(op, ctx.cfg);
      else if (check == "moments") o = check_moments(op, ctx.cfg);
      else if (check == "duality") o = check_duality(op, ctx.cfg, st);
      else continue;
      o.result["fixture"] = op.name;
      o.result["passed"] = o.passed;
      emit_json(sub, op.name + "_" + check + ".json", o.result);
      row[check] = o.passed;
      failures += o.passed ? 0 : 1;
    }
    table.push_back(row);
  }

  json summary{{"checks", checks}, {"table", table}};
  if (a.run == "all" || a.run == "maxprin") {
    const CharacteristicSystem sys = pentagon_fixture_system();
    const CharacteristicPentagon p = pentagon_fixture();
    const MaxprinReport rep = run_seeded(sys, p, ctx.cfg.seed_first, ctx.cfg.seed_count, ctx.cfg.degree_bound,
                                         ctx.cfg.grid);
    json r{{"fixture", "pentagon_fixture"},
           {"instances", static_cast<int>(rep.instances.size())},
           {"hypothesis_count", rep.hypothesis_count},
           {"counterexamples", rep.counterexamples},
           {"passed", rep.passed()}};
    emit_json(sub, "pentagon_fixture_maxprin.json", r);
    summary["maxprin"] = r;
    failures += rep.passed() ? 0 : 1;
  }
  summary["failures"] = failures;
  emit_json(ctx, "suite_summary.json", summary);

  if (ctx.out) {
    *ctx.out << "fixture";
    for (const auto& c : checks) *ctx.out << "  " << c;
    *ctx.out << "\n";
    for (const auto& row : table) {
      *ctx.out << row["fixture"].get<std::string>();
      for (const auto& c : checks) *ctx.out << "  " << (row.value(c, false) ? "ok" : "FAIL");
      *ctx.out << "\n";
    }
    *ctx.out << "failures: " << failures << "\n";
  }
  return 0;
}

}  // namespace qhyp::cli
