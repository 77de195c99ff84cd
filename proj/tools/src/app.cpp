#include "qhyp/cli/app.hpp"

#include <cstdlib>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qhyp/error.hpp"

namespace qhyp::cli {

using json = nlohmann::json;

namespace {

struct State {
  std::string config_path;
  std::optional<std::string> output_dir;
  bool schema = false;

  std::vector<double> coeffs, angles;
  std::optional<int> n_max, q_max, D, D_b, grid, xi_count, n_circle, n_edge, n_r, n_t;
  std::optional<double> h;

  BilliardArgs billiard;
  TracesArgs traces;
  MomentsArgs moments;
  DualityArgs duality;
  MaxprinArgs maxprin;
  QuadratureArgs quadrature;
  SuiteArgs suite;
  std::vector<double> traces_apex, maxprin_apex;
};

const char* subcommands[] = {"analyze", "billiard", "kernel", "traces", "moments",
                             "duality", "maxprin", "quadrature", "suite"};

std::unique_ptr<CLI::App> build_app(State& s) {
  auto app = std::make_unique<CLI::App>("Fourth-order hyperbolic operator analysis", "qhyp");
  // --h is the finite-difference step, so help is long-form only.
  app->set_help_flag("--help", "print help");
  app->fallthrough();
  app->require_subcommand(0, 1);
  app->add_option("--config", s.config_path, "JSON run configuration");
  app->add_option("--output-dir", s.output_dir, "artifact directory (overrides QHYP_OUTPUT_DIR and the config)");
  app->add_flag("--schema", s.schema, "print the config and option schema as JSON");
  app->add_option("--coeffs", s.coeffs, "a0,a1,a2,a3,a4")->delimiter(',')->expected(5)->allow_extra_args(false);
  app->add_option("--angles", s.angles, "phi1,phi2,phi3,phi4")->delimiter(',')->expected(4)->allow_extra_args(false);
  app->add_option("--nmax", s.n_max, "billiard iteration cap");
  app->add_option("--qmax", s.q_max, "largest kernel degree");
  app->add_option("--D", s.D, "moment test degree");
  app->add_option("--Db", s.D_b, "boundary trig degree");
  app->add_option("--grid", s.grid, "plot and sampling grid size");
  app->add_option("--xi-grid", s.xi_count, "number of ξ samples");
  app->add_option("--h", s.h, "finite-difference step");
  app->add_option("--n-circle", s.n_circle, "circle quadrature nodes");
  app->add_option("--n-edge", s.n_edge, "Gauss nodes per polygon edge");
  app->add_option("--n-r", s.n_r, "disk radial nodes");
  app->add_option("--n-t", s.n_t, "disk angular nodes");

  app->add_subcommand("analyze", "roots, angles and classification of the symbol");

  auto* b = app->add_subcommand("billiard", "John-map orbit and periodicity verdict");
  b->add_option("--tau0", s.billiard.tau0, "starting point on the circle");
  b->add_option("--orbit-steps", s.billiard.orbit_steps, "orbit length written to CSV");

  app->add_subcommand("kernel", "Chebyshev kernel scan of the Dirichlet problem on the disk");

  auto* t = app->add_subcommand("traces", "L-traces on a boundary and the Green identity residual");
  t->add_option("--u", s.traces.u_path, "polynomial JSON")->required();
  t->add_option("--v", s.traces.v_path, "polynomial JSON (default 1)");
  t->add_option("--domain", s.traces.domain, "disk or pentagon")->check(CLI::IsMember({"disk", "pentagon"}));
  t->add_option("--apex", s.traces_apex, "x,y")->delimiter(',')->expected(2)->allow_extra_args(false);

  auto* m = app->add_subcommand("moments", "boundary moment residuals or Dirichlet moment solve");
  m->add_option("--mode", s.moments.mode, "cauchy or dirichlet")->check(CLI::IsMember({"cauchy", "dirichlet"}));
  m->add_option("--f", s.moments.f_path, "right-hand side polynomial JSON (default 0)");
  m->add_option("--data", s.moments.data_path, "boundary data JSON {n_circle, L0, L1[, L2, L3]}")->required();

  auto* d = app->add_subcommand("duality", "Fourier-side residuals of a Dirichlet solution");
  d->add_option("--u", s.duality.u_path, "polynomial JSON");
  d->add_option("--kernel-q", s.duality.kernel_q, "use the kernel solution of this degree");
  d->add_option("--form", s.duality.form, "displayed, disk_exact or both")
      ->check(CLI::IsMember({"displayed", "disk_exact", "both"}));

  auto* x = app->add_subcommand("maxprin", "maximum-principle experiment on a characteristic pentagon");
  x->add_flag("--wave-demo", s.maxprin.wave_demo, "sin x sin t demo on [0, π]²");
  x->add_option("--seeds", s.maxprin.seeds, "seed range a..b");
  x->add_option("--apex", s.maxprin_apex, "x,y")->delimiter(',')->expected(2)->allow_extra_args(false);

  auto* q = app->add_subcommand("quadrature", "quadrature rules and self-test");
  q->add_flag("--selftest", s.quadrature.selftest, "monomial integral residual table");
  q->add_option("--kind", s.quadrature.kind, "disk, circle, gauss, triangle or pentagon")
      ->check(CLI::IsMember({"disk", "circle", "gauss", "triangle", "pentagon"}));
  q->add_option("--n", s.quadrature.n, "rule size");

  auto* su = app->add_subcommand("suite", "fixture suite report");
  su->add_option("--run", s.suite.run, "all, maxprin or a single check");
  return app;
}

RunConfig resolve_config(const State& s) {
  RunConfig cfg = s.config_path.empty() ? RunConfig{} : load_config(s.config_path);
  if (!s.coeffs.empty() && !s.angles.empty()) throw config_error("give either --coeffs or --angles, not both");
  if (!s.coeffs.empty()) {
    cfg.coeffs.emplace();
    std::copy(s.coeffs.begin(), s.coeffs.end(), cfg.coeffs->begin());
    cfg.angles.reset();
  }
  if (!s.angles.empty()) {
    cfg.angles.emplace();
    std::copy(s.angles.begin(), s.angles.end(), cfg.angles->begin());
    cfg.coeffs.reset();
  }
  auto set = [](auto& field, const auto& opt) {
    if (opt) field = *opt;
  };
  set(cfg.n_max, s.n_max);
  set(cfg.q_max, s.q_max);
  set(cfg.D, s.D);
  set(cfg.D_b, s.D_b);
  set(cfg.grid, s.grid);
  set(cfg.xi_count, s.xi_count);
  set(cfg.h, s.h);
  set(cfg.n_circle, s.n_circle);
  set(cfg.n_edge, s.n_edge);
  set(cfg.n_r, s.n_r);
  set(cfg.n_t, s.n_t);
  if (s.output_dir) {
    cfg.output_dir = *s.output_dir;
  } else if (const char* env = std::getenv("QHYP_OUTPUT_DIR"); env && *env) {
    cfg.output_dir = env;
  }
  validate(cfg);
  return cfg;
}

int dispatch(const std::string& name, const Context& ctx, State& s) {
  if (name == "analyze") return cmd_analyze(ctx);
  if (name == "billiard") return cmd_billiard(ctx, s.billiard);
  if (name == "kernel") return cmd_kernel(ctx);
  if (name == "traces") {
    if (!s.traces_apex.empty()) s.traces.apex = {s.traces_apex[0], s.traces_apex[1]};
    return cmd_traces(ctx, s.traces);
  }
  if (name == "moments") return cmd_moments(ctx, s.moments);
  if (name == "duality") {
    if (s.duality.u_path.empty() == (s.duality.kernel_q == 0))
      throw input_error("duality needs exactly one of --u and --kernel-q");
    return cmd_duality(ctx, s.duality);
  }
  if (name == "maxprin") {
    if (!s.maxprin_apex.empty()) s.maxprin.apex = {s.maxprin_apex[0], s.maxprin_apex[1]};
    return cmd_maxprin(ctx, s.maxprin);
  }
  if (name == "quadrature") return cmd_quadrature(ctx, s.quadrature);
  return cmd_suite(ctx, s.suite);
}

json options_json(const CLI::App& a) {
  json opts = json::array();
  for (const CLI::Option* o : a.get_options()) {
    if (o->get_name() == "--help") continue;
    opts.push_back({{"name", o->get_name()}, {"description", o->get_description()}, {"flag", o->get_type_size() == 0}});
  }
  return opts;
}

}  // namespace

json schema() {
  State s;
  auto app = build_app(s);
  json subs = json::object();
  for (const char* name : subcommands) {
    const CLI::App* sub = app->get_subcommand(name);
    subs[name] = {{"description", sub->get_description()}, {"options", options_json(*sub)}};
  }
  return {{"config", config_schema()},
          {"global_options", options_json(*app)},
          {"subcommands", subs},
          {"environment", {{"QHYP_OUTPUT_DIR", "output directory; below --output-dir, above the config"}}},
          {"exit_codes", {{"ok", exit_ok}, {"internal", exit_internal}, {"validation", exit_validation},
                          {"usage", exit_usage}}}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  State s;
  auto app = build_app(s);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app->help() << "\nschema:\n" << schema().dump(2) << "\n";
    return exit_usage;
  }
  if (s.schema) {
    out << schema().dump(2) << "\n";
    return exit_ok;
  }
  const auto chosen = app->get_subcommands();
  if (chosen.empty()) {
    err << "error: a subcommand is required\n\n" << app->help() << "\nschema:\n" << schema().dump(2) << "\n";
    return exit_usage;
  }

  try {
    Context ctx;
    ctx.cfg = resolve_config(s);
    ctx.out_dir = ctx.cfg.output_dir;
    ctx.out = &out;
    ctx.command = chosen.front()->get_name();
    ctx.arguments = chosen.front()->config_to_str(false, false);
    return dispatch(ctx.command, ctx, s);
  } catch (const config_error& e) {
    err << "config error: " << e.what() << "\n";
    return exit_validation;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return exit_validation;
  } catch (const qhyp::error& e) {
    err << "validation error: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace qhyp::cli
