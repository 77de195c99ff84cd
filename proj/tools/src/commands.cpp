#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

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
namespace fs = std::filesystem;

std::filesystem::path emit_json(const Context& ctx, const std::string& name, const json& result,
                                const std::string& extra_inputs) {
  json doc;
  doc["command"] = ctx.command;
  doc["config"] = to_json(ctx.cfg);
  doc["input_hash"] = fnv1a_hex(ctx.command + "\n" + ctx.arguments + "\n" + doc["config"].dump() + "\n" + extra_inputs);
  doc["result"] = result;
  const fs::path path = ctx.out_dir / name;
  write_atomic(path, dump_json(doc));
  if (ctx.out) *ctx.out << "wrote " << path.string() << "\n";
  return path;
}

std::filesystem::path emit_text(const Context& ctx, const std::string& name, const std::string& text) {
  const fs::path path = ctx.out_dir / name;
  write_atomic(path, text);
  if (ctx.out) *ctx.out << "wrote " << path.string() << "\n";
  return path;
}

SymbolTolerances symbol_tolerances(const RunConfig& cfg) {
  SymbolTolerances t;
  t.root_separation = cfg.root_tol;
  t.real_tolerance = cfg.root_tol;
  return t;
}

QuarticSymbol resolve_symbol(const RunConfig& cfg) {
  if (cfg.angles) return from_angles(*cfg.angles, symbol_tolerances(cfg));
  if (cfg.coeffs) return QuarticSymbol{*cfg.coeffs};
  throw input_error("an operator is required: pass --coeffs or --angles (or set them in the config)");
}

CharacteristicSystem resolve_system(const RunConfig& cfg) {
  if (cfg.angles) return system_from_angles(*cfg.angles, symbol_tolerances(cfg));
  return characteristic_system(resolve_symbol(cfg), symbol_tolerances(cfg));
}

namespace {

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string label_name(int label) {
  if (label == label_gamma0) return "gamma0";
  if (label == label_circle) return "circle";
  if (label >= 0 && label <= 3) return "char" + std::to_string(label);
  return "edge";
}

BiPoly load_poly(const std::string& path, std::string& digest) {
  if (path.empty()) throw input_error("a polynomial file is required");
  try {
    const BiPoly p = bipoly_from_json(read_json_file(path));
    digest += bipoly_to_json(p).dump() + "\n";
    return p;
  } catch (const std::runtime_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

json verdict_json(const BilliardVerdict& v) {
  json j;
  j["verdict"] = v.periodic() ? "Period" : "Aperiodic";
  j["period"] = v.period ? json(*v.period) : json(nullptr);
  j["n_max"] = v.n_max;
  return j;
}

json rational_json(const std::optional<RationalAngles>& r) {
  if (!r) return nullptr;
  json p = json::array();
  for (const auto& row : r->p) p.push_back(row);
  return {{"q", r->q}, {"p", p}};
}

json residuals_json(const KernelResiduals& r) {
  return {{"ridge_annihilated", r.ridge_annihilated}, {"Lu_relative", r.Lu_relative},
          {"Lu_zero", r.Lu_zero()},                   {"boundary_u", r.boundary_u},
          {"boundary_dnu", r.boundary_dnu},           {"interior_max", r.interior_max},
          {"scaled_boundary", r.scaled_boundary}};
}

std::string grid_csv(const std::function<double(Vec2)>& u, double lo_x, double hi_x, double lo_y,
                     double hi_y, int n, const std::function<bool(Vec2)>& inside) {
  CsvTable t({"x1", "x2", "u"});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Vec2 x{lo_x + (hi_x - lo_x) * (i + 0.5) / n, lo_y + (hi_y - lo_y) * (k + 0.5) / n};
      if (!inside(x)) continue;
      const double row[3] = {x.x, x.y, u(x)};
      t.add_row(row);
    }
  return t.str();
}

json dual_json(const DualResult& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"xi", vec_json(s.xi)},
                       {"residual", s.residual},
                       {"stencil_max", s.stencil_max},
                       {"relative", s.relative}});
  return {{"form", to_string(r.form)},
          {"samples", samples},
          {"max_residual", r.max_residual},
          {"max_relative", r.max_relative},
          {"error_budget",
           {{"h", r.h}, {"truncation", r.truncation_estimate}, {"quadrature", r.quadrature_estimate}}}};
}

json boundary_data_json(const TraceSet& ts) {
  return {{"n_circle", ts.rule.size()}, {"L0", ts.L[0]}, {"L1", ts.L[1]}, {"L2", ts.L[2]}, {"L3", ts.L[3]}};
}

}  // namespace

json system_to_json(const CharacteristicSystem& sys) {
  json t = json::array(), n = json::array();
  for (int j = 0; j < 4; ++j) {
    t.push_back(vec_json(sys.tangents[j]));
    n.push_back(vec_json(sys.normals[j]));
  }
  return {{"lambdas", sys.lambdas}, {"phis", sys.phis}, {"tangents", t}, {"normals", n}, {"scale", sys.scale}};
}

CharacteristicPentagon cli_pentagon(const CharacteristicSystem& sys, std::array<double, 2> apex) {
  return pentagon({apex[0], apex[1]}, SegmentGamma0{-1.0, 1.0}, sys, PentagonAssignment{{0, 3}, {2, 1}});
}

int cmd_analyze(const Context& ctx) {
  const QuarticSymbol sym = resolve_symbol(ctx.cfg);
  const auto tol = symbol_tolerances(ctx.cfg);
  json r;
  r["coeffs"] = sym.a;
  json roots = json::array();
  for (const auto& z : find_roots(sym, tol)) roots.push_back(complex_json(z));
  r["roots"] = roots;
  const Classification c = classify(sym, tol);
  if (const auto* h = std::get_if<Hyperbolic>(&c)) {
    r["classification"] = "Hyperbolic";
    r["angles"] = h->system.phis;
    r["system"] = system_to_json(h->system);
    std::vector<Vec2> samples;
    for (int k = 0; k < 64; ++k) samples.push_back({std::cos(two_pi * k / 64), std::sin(two_pi * k / 64)});
    r["factorization_residual"] = factorization_residual(h->system, sym, samples);
  } else {
    const auto& d = std::get<Degenerate>(c);
    r["classification"] = "Degenerate";
    r["degenerate"] = {{"reason", to_string(d.reason)},
                       {"root", complex_json(d.root)},
                       {"at_plus_minus_i", d.at_plus_minus_i}};
  }
  emit_json(ctx, "analyze.json", r);
  return 0;
}

int cmd_billiard(const Context& ctx, const BilliardArgs& a) {
  if (a.orbit_steps < 1) throw input_error("--orbit-steps must be ≥ 1");
  const CharacteristicSystem sys = resolve_system(ctx.cfg);
  const BilliardMap map = BilliardMap::from_system(sys);
  const PeriodOptions popt{ctx.cfg.n_max, ctx.cfg.period_tol};
  const auto verdict = detect_period(map, a.tau0, popt);
  const auto rat = rationality_test(map.phis, {ctx.cfg.Q_max, ctx.cfg.rational_tol});

  double discrepancy = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double tau = two_pi * (k + 0.5) / 100.0;
    double t = tau;
    for (int j = 0; j < 4; ++j) t = step(map, j, t);
    discrepancy = std::max(discrepancy, circle_distance(t, john_map(map, tau)));
  }

  json r;
  r["phis"] = map.phis;
  r["delta"] = map.delta;
  r["delta_over_pi"] = map.delta / pi;
  r["tau0"] = a.tau0;
  r["billiard"] = verdict_json(verdict);
  r["rationality"] = rational_json(rat);
  r["composite_max_discrepancy"] = discrepancy;
  emit_json(ctx, "billiard.json", r);

  const Orbit o = orbit(map, a.tau0, {a.orbit_steps, ctx.cfg.period_tol});
  CsvTable t({"k", "tau"});
  for (std::size_t k = 0; k < o.taus.size(); ++k) {
    const double row[2] = {static_cast<double>(k), o.taus[k]};
    t.add_row(row);
  }
  emit_text(ctx, "billiard_orbit.csv", t.str());
  return 0;
}

int cmd_kernel(const Context& ctx) {
  const CharacteristicSystem sys = resolve_system(ctx.cfg);
  FredholmOptions opt;
  opt.q_max = ctx.cfg.q_max;
  opt.kernel.null_tol = ctx.cfg.null_tol;
  opt.kernel.n_certify = ctx.cfg.n_circle;
  opt.kernel.certify_grid = ctx.cfg.grid;
  opt.period = {ctx.cfg.n_max, ctx.cfg.period_tol};
  opt.rationality = {ctx.cfg.Q_max, ctx.cfg.rational_tol};
  const FredholmReport rep = fredholm_violation_check(sys, opt);

  json scans = json::array();
  for (const auto& s : rep.scans) {
    json sols = json::array();
    for (std::size_t k = 0; k < s.solutions.size(); ++k) {
      const auto& sol = s.solutions[k];
      sols.push_back({{"C", sol.C}, {"u", bipoly_to_json(sol.u)}, {"residuals", residuals_json(sol.residuals)}});
      const std::string name = "kernel_q" + std::to_string(s.q) + "_" + std::to_string(k) + ".csv";
      emit_text(ctx, name,
                grid_csv([&](Vec2 x) { return candidate_value(sol.q, sys, sol.C, x); }, -1, 1, -1, 1,
                         ctx.cfg.grid, [](Vec2 x) { return dot(x, x) < 1.0; }));
    }
    json e{{"q", s.q}, {"singular_values", s.singular_values}, {"solutions", sols}};
    if (!s.solutions.empty()) e["gram_condition"] = gram_condition(s.solutions, sys);
    scans.push_back(e);
  }
  json r{{"system", system_to_json(sys)},
         {"rationality", rational_json(rep.rational)},
         {"billiard", verdict_json(rep.billiard)},
         {"kernel_degrees", rep.kernel_degrees},
         {"consistent", rep.consistent},
         {"scans", scans}};
  emit_json(ctx, "kernel.json", r);
  return 0;
}

int cmd_traces(const Context& ctx, const TracesArgs& a) {
  const CharacteristicSystem sys = resolve_system(ctx.cfg);
  std::string digest;
  const BiPoly u = load_poly(a.u_path, digest);
  const BiPoly v = a.v_path.empty() ? BiPoly::constant(1.0) : load_poly(a.v_path, digest);

  BoundaryRule boundary;
  QuadratureRule area;
  json r;
  if (a.domain == "disk") {
    boundary = circle_quadrature(ctx.cfg.n_circle);
    area = disk_quadrature(ctx.cfg.n_r, ctx.cfg.n_t);
  } else if (a.domain == "pentagon") {
    const auto p = cli_pentagon(sys, a.apex);
    const auto rules = polygon_quadrature(p, ctx.cfg.n_edge);
    boundary = rules.boundary;
    area = rules.area;
    json verts = json::array();
    for (const Vec2& x : p.vertices) verts.push_back(vec_json(x));
    r["pentagon"] = verts;
  } else {
    throw input_error("--domain must be disk or pentagon");
  }
  const TraceSet ts = tilde_traces(u, sys, boundary);
  const GreenResidual g = green_identity_residual(u, v, sys, area, boundary);
  r["domain"] = a.domain;
  r["green"] = {{"lhs", g.lhs}, {"rhs", g.rhs}, {"relative", g.relative}};
  r["characteristic_edge_trace_max"] = characteristic_edge_trace_max(ts);
  if (a.domain == "pentagon") {
    const auto m = trace_minima(ts, label_gamma0);
    r["gamma0_trace_minima"] = m;
    bool ok = true;
    for (double x : m) ok = ok && x >= -1e-12;
    r["gamma0_sign_check"] = ok;
  } else {
    r["boundary_data"] = boundary_data_json(ts);
  }
  emit_json(ctx, "traces.json", r, digest);

  CsvTable t({"edge", "s", "L0", "L1", "L2", "L3"});
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const double row[5] = {boundary.params[i], ts.L[0][i], ts.L[1][i], ts.L[2][i], ts.L[3][i]};
    t.add_row(label_name(boundary.labels[i]), row);
  }
  emit_text(ctx, "traces.csv", t.str());
  return 0;
}

namespace {

std::array<std::vector<double>, 4> load_boundary_data(const std::string& path, int n_expected,
                                                      std::string& digest) {
  if (path.empty()) throw input_error("--data is required");
  json j;
  try {
    j = read_json_file(path);
  } catch (const std::runtime_error& e) {
    throw input_error(e.what());
  }
  // Accept the bare schema, a traces artifact, or its boundary_data block.
  if (j.contains("result")) j = j["result"];
  if (j.contains("boundary_data")) j = j["boundary_data"];
  if (!j.contains("n_circle") || !j["n_circle"].is_number_integer())
    throw input_error(path + ": missing integer field 'n_circle'");
  const int n = j["n_circle"].get<int>();
  if (n != n_expected)
    throw input_error(path + ": n_circle = " + std::to_string(n) + " but the config has n_circle = " +
                      std::to_string(n_expected));
  std::array<std::vector<double>, 4> L;
  for (int k = 0; k < 4; ++k) {
    const std::string key = "L" + std::to_string(k);
    if (!j.contains(key)) {
      if (k < 2) throw input_error(path + ": missing field '" + key + "'");
      continue;
    }
    if (!j[key].is_array() || j[key].size() != static_cast<std::size_t>(n))
      throw input_error(path + ": field '" + key + "' must have n_circle numbers");
    for (const auto& x : j[key]) {
      if (!x.is_number()) throw input_error(path + ": field '" + key + "' must hold numbers");
      L[k].push_back(x.get<double>());
    }
  }
  digest += j.dump() + "\n";
  return L;
}

}  // namespace

int cmd_moments(const Context& ctx, const MomentsArgs& a) {
  const CharacteristicSystem sys = resolve_system(ctx.cfg);
  std::string digest;
  const BiPoly f = a.f_path.empty() ? BiPoly{} : load_poly(a.f_path, digest);
  const auto L = load_boundary_data(a.data_path, ctx.cfg.n_circle, digest);
  const BoundaryRule circle = circle_quadrature(ctx.cfg.n_circle);
  const QuadratureRule area = disk_quadrature(ctx.cfg.n_r, ctx.cfg.n_t);

  json r;
  r["mode"] = a.mode;
  if (a.mode == "cauchy") {
    if (L[2].empty() || L[3].empty()) throw input_error("cauchy mode needs L0..L3 in --data");
    TraceSet ts{circle, L};
    const auto rows = cauchy_compatibility_residuals(f, ts, sys, area, ctx.cfg.D);
    json jr = json::array();
    std::vector<double> per_degree(ctx.cfg.D + 1, 0.0);
    double worst = 0.0;
    for (const auto& row : rows) {
      jr.push_back({{"j", row.direction}, {"k", row.degree}, {"boundary", row.boundary},
                    {"area", row.area}, {"residual", row.residual}});
      per_degree[row.degree] = std::max(per_degree[row.degree], row.residual);
      worst = std::max(worst, row.residual);
    }
    r["residuals"] = jr;
    r["residuals_per_degree"] = per_degree;
    r["max_residual"] = worst;
  } else if (a.mode == "dirichlet") {
    const auto m = solve_dirichlet_moments(f, L[0], L[1], sys, circle, area,
                                           {ctx.cfg.D, ctx.cfg.D_b, ctx.cfg.lsq_rank_tol});
    r["L3"] = m.L3;
    r["L2"] = m.L2;
    r["residual_norm"] = m.residual_norm;
    r["singular_values"] = m.singular_values;
    r["rank_deficient"] = m.rank_deficient;
    r["sigma_ratio"] = m.singular_values.empty() ? 0.0 : m.singular_values.back() / m.singular_values.front();
    r["shape"] = {m.rows, m.cols};
  } else {
    throw input_error("--mode must be cauchy or dirichlet");
  }
  emit_json(ctx, "moments.json", r, digest);
  return 0;
}

int cmd_duality(const Context& ctx, const DualityArgs& a) {
  const CharacteristicSystem sys = resolve_system(ctx.cfg);
  std::string digest;
  BiPoly u;
  if (a.kernel_q > 0) {
    KernelOptions kopt;
    kopt.null_tol = ctx.cfg.null_tol;
    const auto scan = solve_boundary_coefficients(a.kernel_q, sys, kopt);
    if (scan.solutions.empty())
      throw input_error("no kernel solution of degree " + std::to_string(a.kernel_q) + " for this operator");
    u = scan.solutions.front().u;
    digest += "kernel_q=" + std::to_string(a.kernel_q) + "\n";
  } else {
    u = load_poly(a.u_path, digest);
  }

  // Precondition: homogeneous Dirichlet data on the circle.
  const BiPoly u1 = u.partial(0), u2 = u.partial(1);
  double bmax = 0.0, imax = 0.0;
  for (const Vec2& x : circle_quadrature(ctx.cfg.n_circle).nodes)
    bmax = std::max({bmax, std::abs(u(x.x, x.y)), std::abs(x.x * u1(x.x, x.y) + x.y * u2(x.x, x.y))});
  for (const Vec2& x : disk_quadrature(16, 32).nodes) imax = std::max(imax, std::abs(u(x.x, x.y)));
  if (bmax > 1e-9 * std::max(imax, 1e-300))
    throw input_error("u does not satisfy u = u′ν = 0 on the unit circle (max boundary value " +
                      format_double(bmax) + ")");

  std::vector<Vec2> xs;
  for (int k = 0; k < ctx.cfg.xi_count; ++k) {
    const double t = two_pi * (k + 0.3) / ctx.cfg.xi_count;
    xs.push_back({ctx.cfg.xi_radius * std::cos(t), ctx.cfg.xi_radius * std::sin(t)});
  }
  std::vector<dual_form> forms;
  if (a.form == "both" || a.form == "displayed") forms.push_back(dual_form::displayed);
  if (a.form == "both" || a.form == "disk_exact") forms.push_back(dual_form::disk_exact);
  if (forms.empty()) throw input_error("--form must be displayed, disk_exact or both");

  json r;
  r["u"] = bipoly_to_json(u);
  json res = json::object();
  for (dual_form f : forms)
    res[to_string(f)] = dual_json(dual_residual(u, sys, xs, ctx.cfg.h, f, ctx.cfg.dual_n_r, ctx.cfg.dual_n_t));
  r["dual_residuals"] = res;
  json g = json::array();
  const double envelope = std::min(ctx.cfg.dual_n_r, ctx.cfg.dual_n_t / 2) / 8.0;
  for (const auto& line : goursat_check(u, sys, 65, envelope, ctx.cfg.dual_n_r, ctx.cfg.dual_n_t))
    g.push_back({{"direction", line.direction}, {"max_w", line.max_w}, {"max_v", line.max_v}});
  r["goursat_maxima"] = g;
  emit_json(ctx, "duality.json", r, digest);
  return 0;
}

namespace {

std::pair<std::uint64_t, int> parse_seed_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) return {std::stoull(s), 1};
    const std::uint64_t lo = std::stoull(s.substr(0, dots)), hi = std::stoull(s.substr(dots + 2));
    if (hi < lo) throw input_error("seed range must be ascending");
    return {lo, static_cast<int>(hi - lo + 1)};
  } catch (const std::logic_error&) {
    throw input_error("--seeds must look like 0..99");
  }
}

}  // namespace

int cmd_maxprin(const Context& ctx, const MaxprinArgs& a) {
  if (a.wave_demo) {
    const WaveDemo d = wave_demo(ctx.cfg.grid);
    json r{{"n", d.n},
           {"max", d.max},
           {"argmax", {{"i", d.argmax_i}, {"k", d.argmax_k}, {"x", d.argmax_x}, {"t", d.argmax_t}}},
           {"boundary_max_abs", d.boundary_max_abs}};
    emit_json(ctx, "wave_demo.json", r);
    CsvTable t({"x", "t", "u"});
    for (int i = 0; i <= d.n; ++i)
      for (int k = 0; k <= d.n; ++k) {
        const double row[3] = {pi * i / d.n, pi * k / d.n, d.values[static_cast<std::size_t>(i) * (d.n + 1) + k]};
        t.add_row(row);
      }
    emit_text(ctx, "wave_demo.csv", t.str());
    return 0;
  }

  const CharacteristicSystem sys =
      ctx.cfg.coeffs || ctx.cfg.angles ? resolve_system(ctx.cfg) : pentagon_fixture_system();
  const CharacteristicPentagon p = cli_pentagon(sys, a.apex);
  std::uint64_t first = ctx.cfg.seed_first;
  int count = ctx.cfg.seed_count;
  if (!a.seeds.empty()) std::tie(first, count) = parse_seed_range(a.seeds);

  const MaxprinReport rep = run_seeded(sys, p, first, count, ctx.cfg.degree_bound, ctx.cfg.grid);
  json inst = json::array();
  for (const auto& si : rep.instances) {
    const auto& e = si.instance;
    json edges = json::array();
    for (const auto& m : e.edge_trace_minima) edges.push_back(m);
    inst.push_back({{"seed", si.seed},
                    {"hypothesis_ok", e.hypothesis_ok},
                    {"f_nonpositive", e.f_nonpositive},
                    {"traces_nonnegative", e.traces_nonnegative},
                    {"interior_max", e.interior_max},
                    {"scale", e.scale},
                    {"verdict", e.verdict},
                    {"edge_trace_minima", edges}});
    if (e.hypothesis_ok) {
      double lx = p.vertices[0].x, hx = lx, ly = p.vertices[0].y, hy = ly;
      for (const Vec2& v : p.vertices) lx = std::min(lx, v.x), hx = std::max(hx, v.x), ly = std::min(ly, v.y), hy = std::max(hy, v.y);
      emit_text(ctx, "maxprin_seed" + std::to_string(si.seed) + ".csv",
                grid_csv([&](Vec2 x) { return e.u(x.x, x.y); }, lx, hx, ly, hy, ctx.cfg.grid,
                         [&](Vec2 x) { return p.contains(x); }));
    }
    if (!e.verdict)
      emit_json(ctx, "maxprin_counterexample_seed" + std::to_string(si.seed) + ".json",
                {{"seed", si.seed}, {"u", bipoly_to_json(e.u)}, {"interior_max", e.interior_max},
                 {"scale", e.scale}, {"gamma0_trace_minima", trace_minima(e.gamma0_traces, label_gamma0)}});
  }
  json verts = json::array();
  for (const Vec2& x : p.vertices) verts.push_back(vec_json(x));
  json r{{"pentagon", verts},
         {"instances", inst},
         {"hypothesis_count", rep.hypothesis_count},
         {"counterexamples", rep.counterexamples},
         {"passed", rep.passed()}};
  emit_json(ctx, "maxprin.json", r);
  return 0;
}

namespace {

// ∫ over the unit disk / circle / reference triangle of x1^i x2^j.
double disk_monomial(int i, int j) {
  if (i % 2 || j % 2) return 0.0;
  return 2.0 * std::tgamma((i + 1) / 2.0) * std::tgamma((j + 1) / 2.0) /
         ((i + j + 2) * std::tgamma((i + j + 2) / 2.0));
}

double circle_monomial(int i, int j) { return (i + j + 2) * disk_monomial(i, j); }

double triangle_monomial(int i, int j) {
  return std::tgamma(i + 1.0) * std::tgamma(j + 1.0) / std::tgamma(i + j + 3.0);
}

std::string quadrature_selftest(const RunConfig& cfg) {
  CsvTable t({"rule", "i", "j", "computed", "exact", "residual"});
  const QuadratureRule disk = disk_quadrature(cfg.n_r, cfg.n_t);
  const BoundaryRule circle = circle_quadrature(cfg.n_circle);
  const QuadratureRule tri = triangle_quadrature({0, 0}, {1, 0}, {0, 1});
  const auto [gx, gw] = gauss_legendre(cfg.n_edge);
  auto row = [&](const char* name, int i, int j, double got, double want) {
    const double v[5] = {double(i), double(j), got, want, std::abs(got - want)};
    t.add_row(name, v);
  };
  for (int d = 0; d <= 8; ++d)
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      auto mono = [&](Vec2 x) { return std::pow(x.x, i) * std::pow(x.y, j); };
      row("disk", i, j, disk.integrate(mono), disk_monomial(i, j));
      row("circle", i, j, circle.integrate([&](std::size_t k) { return mono(circle.nodes[k]); }),
          circle_monomial(i, j));
      if (d <= 4) row("triangle", i, j, tri.integrate(mono), triangle_monomial(i, j));
    }
  for (int i = 0; i <= 16; ++i) {
    std::vector<double> v(gx.size());
    for (std::size_t k = 0; k < gx.size(); ++k) v[k] = gw[k] * std::pow(gx[k], i);
    row("gauss", i, 0, pairwise_sum(v), i % 2 ? 0.0 : 2.0 / (i + 1));
  }
  return t.str();
}

}  // namespace

int cmd_quadrature(const Context& ctx, const QuadratureArgs& a) {
  if (a.selftest) {
    const std::string csv = quadrature_selftest(ctx.cfg);
    emit_text(ctx, "quadrature_selftest.csv", csv);
    if (ctx.out) *ctx.out << csv;
    return 0;
  }
  json r;
  r["kind"] = a.kind;
  auto area_json = [&](const QuadratureRule& q) {
    json nodes = json::array();
    for (const Vec2& x : q.nodes) nodes.push_back(vec_json(x));
    r["nodes"] = nodes;
    r["weights"] = q.weights;
    r["measure"] = q.measure();
  };
  if (a.kind == "disk") {
    area_json(disk_quadrature(a.n > 0 ? a.n : ctx.cfg.n_r, a.n > 0 ? 2 * a.n : ctx.cfg.n_t));
  } else if (a.kind == "triangle") {
    area_json(triangle_quadrature({0, 0}, {1, 0}, {0, 1}, a.n > 0 ? a.n : 6));
  } else if (a.kind == "gauss") {
    const auto [x, w] = gauss_legendre(a.n > 0 ? a.n : ctx.cfg.n_edge);
    r["nodes"] = x;
    r["weights"] = w;
    r["measure"] = pairwise_sum(w);
  } else if (a.kind == "circle") {
    const auto c = circle_quadrature(a.n > 0 ? a.n : ctx.cfg.n_circle);
    r["params"] = c.params;
    r["weights"] = c.weights;
    r["measure"] = c.length();
  } else if (a.kind == "pentagon") {
    const auto p = pentagon_fixture();
    const auto rules = polygon_quadrature(p, a.n > 0 ? a.n : ctx.cfg.n_edge);
    r["boundary_length"] = rules.boundary.length();
    r["area"] = rules.area.measure();
    r["exact_area"] = p.area();
  } else {
    throw input_error("--kind must be disk, circle, gauss, triangle or pentagon");
  }
  emit_json(ctx, "quadrature_" + a.kind + ".json", r);
  return 0;
}

}  // namespace qhyp::cli
