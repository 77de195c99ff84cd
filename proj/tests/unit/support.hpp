#pragma once

#include <cmath>
#include <random>

#include "qhyp/poly.hpp"

namespace qhyp::test {

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(gen);
}

// Dense polynomial of total degree ≤ degree, coefficients in [−1, 1].
inline BiPoly random_poly(std::mt19937_64& gen, int degree) {
  BiPoly p;
  for (int d = 0; d <= degree; ++d)
    for (int i = 0; i <= d; ++i) p.add_term({i, d - i}, uniform(gen, -1.0, 1.0));
  return p;
}

// (1 − x1² − x2²)^k
inline BiPoly bubble(int k) {
  const BiPoly b = BiPoly::constant(1.0) - BiPoly::x1() * BiPoly::x1() - BiPoly::x2() * BiPoly::x2();
  BiPoly r = BiPoly::constant(1.0);
  for (int i = 0; i < k; ++i) r = r * b;
  return r;
}

// Jₙ(x) by its power series; accurate to rounding for |x| ≤ 10.
inline double bessel_j_series(int n, double x) {
  double term = std::pow(x / 2.0, n) / std::tgamma(n + 1.0), sum = term;
  for (int m = 1; m < 60; ++m) {
    term *= -(x / 2.0) * (x / 2.0) / (m * static_cast<double>(m + n));
    sum += term;
  }
  return sum;
}

}  // namespace qhyp::test
