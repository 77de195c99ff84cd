#pragma once

// Maximum-principle experiments on characteristic pentagons: if Lu = f ≤ 0 in
// the pentagon and the traces on Γ₀ are ≥ 0, the claim is u ≤ 0 inside.

#include <array>
#include <cstdint>
#include <vector>

#include "qhyp/geometry.hpp"
#include "qhyp/poly.hpp"
#include "qhyp/traces.hpp"

namespace qhyp {

// u = Σⱼ gⱼ(⟨ãʲ,x⟩), each gⱼ of degree ≤ degree_bound with coefficients
// uniform in [−1, 1] drawn from mt19937_64(seed) in the order j, then power.
BiPoly generate_candidate(const CharacteristicSystem& sys, std::uint64_t seed, int degree_bound = 3);

struct MaxprinTolerances {
  double f_tol = 1e-12;       // Lu ≤ f_tol at interior samples
  double trace_tol = 1e-12;   // traces ≥ −trace_tol on Γ₀
  double verdict_rel = 1e-9;  // interior_max ≤ verdict_rel·scale
};

struct ExperimentInstance {
  BiPoly u;
  BiPoly f;
  TraceSet gamma0_traces;
  std::array<std::array<double, 4>, 5> edge_trace_minima{};  // per pentagon edge, per trace
  bool f_nonpositive = false;
  bool traces_nonnegative = false;
  bool hypothesis_ok = false;
  double interior_max = 0.0;
  double scale = 0.0;  // max |u| over the interior samples
  int interior_samples = 0;
  bool verdict = true;  // hypothesis_ok ⇒ interior_max ≤ verdict_rel·scale
};

ExperimentInstance run_experiment(const CharacteristicSystem& sys, const CharacteristicPentagon& p,
                                  const BiPoly& u, int grid = 64, int n_gamma0 = 65,
                                  const MaxprinTolerances& tol = {});

struct SeededInstance {
  std::uint64_t seed = 0;
  ExperimentInstance instance;
};

struct MaxprinReport {
  std::vector<SeededInstance> instances;
  int hypothesis_count = 0;
  std::vector<std::uint64_t> counterexamples;  // seeds with hypothesis_ok and a failed verdict

  bool passed() const { return counterexamples.empty(); }
};

MaxprinReport run_seeded(const CharacteristicSystem& sys, const CharacteristicPentagon& p,
                         std::uint64_t first_seed, int count, int degree_bound = 3, int grid = 64,
                         const MaxprinTolerances& tol = {});

struct WaveDemo {
  int n = 0;                // grid nodes x_i = πi/n, i = 0..n
  std::vector<double> values;  // row-major (i over x, k over t)
  double max = 0.0;
  int argmax_i = 0, argmax_k = 0;
  double argmax_x = 0.0, argmax_t = 0.0;
  double boundary_max_abs = 0.0;
};

// u = sin x·sin t on [0, π]².
WaveDemo wave_demo(int n = 64);

}  // namespace qhyp
