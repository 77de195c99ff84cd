// One line per acceptance criterion. `qhyp_acceptance N` runs criterion N and
// exits 0 on PASS; without arguments every criterion runs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "qhyp/billiard.hpp"
#include "qhyp/cli/app.hpp"
#include "qhyp/duality.hpp"
#include "qhyp/fixtures.hpp"
#include "qhyp/kernel.hpp"
#include "qhyp/maxprin.hpp"
#include "qhyp/moments.hpp"
#include "qhyp/traces.hpp"
#include "support.hpp"

using namespace qhyp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome symbol_criterion() {
  const QuarticSymbol sym{{1, 0, -5, 0, 4}};
  const auto roots = find_roots(sym);
  const double want[4] = {-2, -1, 1, 2};
  double err = 0.0;
  for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(roots[k] - std::complex<double>(want[k], 0)));
  const bool hyperbolic = std::holds_alternative<Hyperbolic>(classify(sym));
  const auto deg = classify(QuarticSymbol{{1, 0, 2, 0, 1}});
  bool at_i = false;
  if (const auto* d = std::get_if<Degenerate>(&deg))
    at_i = d->at_plus_minus_i && std::abs(std::abs(d->root.imag()) - 1) <= 1e-10 && std::abs(d->root.real()) <= 1e-10;
  return {err <= 1e-12 && hyperbolic && at_i,
          "root error " + fmt(err) + ", hyperbolic " + (hyperbolic ? "yes" : "no") + ", (1,0,2,0,1) degenerate at ±i " +
              (at_i ? "yes" : "no")};
}

Outcome billiard_criterion() {
  const auto p3 = detect_period(BilliardMap::from_angles(angles_delta_pi_3()), 1.0);
  const auto p4 = detect_period(BilliardMap::from_angles(angles_delta_pi_4()), 1.0);
  const auto map = BilliardMap::from_system(characteristic_system(QuarticSymbol{{1, 0, -5, 0, 4}}));
  const auto ap = detect_period(map, 1.0, {10000, 1e-9});
  const bool none = !rationality_test(map.phis, {10000, 1e-12}).has_value();
  bool brute_none = true;
  for (long long q = 1; q <= 10000 && brute_none; ++q) {
    bool all = true;
    for (int j = 0; j < 4 && all; ++j)
      for (int k = j + 1; k < 4 && all; ++k) {
        const double d = map.phis[k] - map.phis[j];
        all = std::abs(d - pi * std::round(d * q / pi) / q) <= 1e-12;
      }
    brute_none = !all;
  }
  std::mt19937_64 gen(2024);
  double disc = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double tau = test::uniform(gen, 0.0, two_pi);
    double t = tau;
    for (int j = 0; j < 4; ++j) t = step(map, j, t);
    disc = std::max(disc, circle_distance(t, john_map(map, tau)));
  }
  const bool pass = p3.period == 3 && p4.period == 4 && !ap.periodic() && none && brute_none && disc <= 1e-12;
  return {pass, std::string("Δ=π/3 period ") + (p3.period ? std::to_string(*p3.period) : "none") + ", Δ=π/4 period " +
                    (p4.period ? std::to_string(*p4.period) : "none") + ", arctan system " +
                    (ap.periodic() ? "periodic" : "aperiodic") + ", rationality " + (none ? "None" : "found") +
                    " (brute force " + (brute_none ? "None" : "found") + "), composite discrepancy " + fmt(disc)};
}

Outcome kernel_criterion() {
  int consistent = 0, solutions = 0;
  double worst_boundary = 0.0;
  bool lu_zero = true;
  for (const auto& op : fixture_suite()) {
    const FredholmReport rep = fredholm_violation_check(op.system);
    consistent += rep.consistent ? 1 : 0;
    for (const auto& scan : rep.scans)
      for (const auto& s : scan.solutions) {
        ++solutions;
        lu_zero = lu_zero && s.residuals.Lu_zero();
        worst_boundary = std::max(worst_boundary, s.residuals.scaled_boundary);
      }
  }
  return {consistent == 10 && lu_zero && worst_boundary <= 1e-9,
          std::to_string(consistent) + "/10 consistent, " + std::to_string(solutions) + " solutions, Lu zero " +
              (lu_zero ? "yes" : "no") + ", max scaled boundary residual " + fmt(worst_boundary)};
}

Outcome green_criterion() {
  const QuadratureRule disk = disk_quadrature(32, 64);
  const BoundaryRule circle = circle_quadrature(512);
  const auto suite = fixture_suite();
  std::mt19937_64 gen(4);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const BiPoly u = test::random_poly(gen, 6), v = test::random_poly(gen, 6);
    worst = std::max(worst, green_identity_residual(u, v, suite[k % 10].system, disk, circle).relative);
  }
  const PolygonRules r = polygon_quadrature(pentagon_fixture(), 32);
  const double pent = green_identity_residual(test::random_poly(gen, 6), test::random_poly(gen, 6),
                                              pentagon_fixture_system(), r.area, r.boundary)
                          .relative;
  return {worst <= 1e-8 && pent <= 1e-7, "disk max residual " + fmt(worst) + ", pentagon residual " + fmt(pent)};
}

Outcome traces_criterion() {
  const BoundaryRule circle = circle_quadrature(512);
  std::mt19937_64 gen(5);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const BiPoly u = test::random_poly(gen, 2 + k);
    const auto a = wave_L1_trace(u, circle), b = wave_L1_trace_fd(u, circle);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      num = std::max(num, std::abs(a[i] - b[i]));
      den = std::max(den, std::abs(a[i]));
    }
    worst = std::max(worst, num / den);
  }
  const PolygonRules r = polygon_quadrature(pentagon_fixture(), 32);
  double edge = 0.0;
  for (int k = 0; k < 5; ++k)
    edge = std::max(edge, characteristic_edge_trace_max(
                              tilde_traces(test::random_poly(gen, 6), pentagon_fixture_system(), r.boundary)));
  return {worst <= 1e-6 && edge <= 1e-13,
          "wave L(1) vs finite differences " + fmt(worst) + ", characteristic-edge trace max " + fmt(edge)};
}

Outcome moments_criterion() {
  const BoundaryRule circle = circle_quadrature(512);
  const QuadratureRule disk = disk_quadrature(32, 64);
  const auto aperiodic = irrational_fixtures().front().system;
  const auto periodic = rational_fixtures().front().system;
  std::mt19937_64 gen(6);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const BiPoly u = test::random_poly(gen, 6);
    const TraceSet ts = tilde_traces(u, aperiodic, circle);
    const auto m = solve_dirichlet_moments(apply_L(aperiodic, u), ts.L[0], ts.L[1], aperiodic, circle, disk);
    const auto l3 = trig_project(circle, ts.L[3], 12), l2 = trig_project(circle, ts.L[2], 12);
    for (std::size_t i = 0; i < l3.size(); ++i)
      worst = std::max({worst, std::abs(m.L3[i] - l3[i]), std::abs(m.L2[i] - l2[i])});
  }
  const std::vector<double> zero(circle.size(), 0.0);
  const auto h = solve_dirichlet_moments(BiPoly{}, zero, zero, aperiodic, circle, disk);
  double n = 0.0;
  for (double x : h.L3) n += x * x;
  for (double x : h.L2) n += x * x;
  n = std::sqrt(n);
  const auto p = solve_dirichlet_moments(BiPoly{}, zero, zero, periodic, circle, disk);
  const double ratio = p.singular_values.back() / p.singular_values.front();
  return {worst <= 1e-6 && n <= 1e-8 && p.rank_deficient,
          "recovery error " + fmt(worst) + ", homogeneous aperiodic norm " + fmt(n) + ", periodic σmin/σmax " +
              fmt(ratio) + (p.rank_deficient ? " (RankDeficient)" : " (full rank)")};
}

Outcome duality_criterion() {
  const auto sys = rational_fixtures().front().system;
  const auto scan = solve_boundary_coefficients(4, sys);
  if (scan.solutions.empty()) return {false, "no kernel solution at q = 4"};
  const BiPoly& u = scan.solutions.front().u;
  const auto xs = default_xi_samples(3.5);
  const DualResult shown = dual_residual(u, sys, xs, 0.05, dual_form::displayed);
  const DualResult exact = dual_residual(u, sys, xs, 0.05, dual_form::disk_exact);
  const DiskTransform w(BiPoly::constant(1.0));
  double bessel = 0.0;
  for (int k = 1; k <= 40; ++k) {
    const double rho = 0.2 * k;
    bessel = std::max(bessel, std::abs(w({rho * std::cos(k), rho * std::sin(k)}) -
                                       std::complex<double>(two_pi * test::bessel_j_series(1, rho) / rho, 0)));
  }
  return {shown.max_relative <= 1e-4 && bessel <= 1e-10,
          "biharmonic residual " + fmt(shown.max_relative) + " (limit 1e-4), (1+Δ)² form " +
              fmt(exact.max_relative) + ", Bessel self-test " + fmt(bessel)};
}

Outcome maxprin_criterion() {
  const MaxprinReport rep = run_seeded(pentagon_fixture_system(), pentagon_fixture(), 0, 100);
  const WaveDemo d = wave_demo(64);
  const bool demo = d.max == 1.0 && d.argmax_i == 32 && d.argmax_k == 32;
  std::string detail = std::to_string(rep.hypothesis_count) + "/100 hypothesis-satisfying, " +
                       std::to_string(rep.counterexamples.size()) + " violations";
  if (rep.hypothesis_count == 0) detail += " (vacuous)";
  detail += ", wave demo max " + fmt(d.max) + " at node (" + std::to_string(d.argmax_i) + ", " +
            std::to_string(d.argmax_k) + ")";
  return {rep.passed() && demo, detail};
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    files[fs::relative(e.path(), dir).string()] = ss.str();
  }
  return files;
}

Outcome reproducibility_criterion() {
  const fs::path dir = fs::temp_directory_path() / ("qhyp_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  std::ostringstream sink;
  const std::vector<std::string> args{"suite", "--run", "all", "--output-dir", dir.string()};
  const int c1 = cli::run(args, sink, sink);
  const auto first = snapshot(dir);
  const int c2 = cli::run(args, sink, sink);
  const auto second = snapshot(dir);
  fs::remove_all(dir);
  int differing = 0;
  for (const auto& [name, bytes] : first) {
    auto it = second.find(name);
    if (it == second.end() || it->second != bytes) ++differing;
  }
  const bool pass = c1 == 0 && c2 == 0 && !first.empty() && first.size() == second.size() && differing == 0;
  return {pass, std::to_string(first.size()) + " JSON artifacts, " + std::to_string(differing) + " differ"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const Criterion criteria[] = {
    {"symbol", symbol_criterion},     {"billiard", billiard_criterion}, {"kernel", kernel_criterion},
    {"green", green_criterion},       {"traces", traces_criterion},     {"moments", moments_criterion},
    {"duality", duality_criterion},   {"maxprin", maxprin_criterion},   {"reproducibility", reproducibility_criterion},
};

bool report(int n) {
  Outcome o;
  try {
    o = criteria[n - 1].run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %d %-15s %s: %s\n", n, criteria[n - 1].name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: qhyp_acceptance [1-9]\n");
    return 64;
  }
  if (argc == 2) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 9) {
      std::fprintf(stderr, "criterion must be 1..9\n");
      return 64;
    }
    return report(n) ? 0 : 1;
  }
  int failed = 0;
  for (int n = 1; n <= 9; ++n) failed += report(n) ? 0 : 1;
  return failed ? 1 : 0;
}
