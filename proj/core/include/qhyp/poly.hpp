#pragma once

// Polynomials in one variable (UniPoly) and in (x1, x2) (BiPoly), exact over
// the coefficient type. Rational instantiations use boost cpp_rational; the
// double instantiations carry angle-derived coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qhyp/error.hpp"
#include "qhyp/symbol.hpp"
#include "qhyp/vec2.hpp"

namespace qhyp {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
class BasicUniPoly {
 public:
  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  static BasicUniPoly monomial(int k, T coeff = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    c.back() = coeff;
    return BasicUniPoly(std::move(c));
  }

  // −1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T operator[](int k) const { return k >= 0 && k <= degree() ? c_[k] : T(0); }

  template <class X>
  X operator()(X z) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + X(*it);
    return acc;
  }

  BasicUniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return BasicUniPoly(std::move(d));
  }

  friend BasicUniPoly operator+(const BasicUniPoly& p, const BasicUniPoly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return BasicUniPoly(std::move(r));
  }
  friend BasicUniPoly operator-(const BasicUniPoly& p, const BasicUniPoly& q) {
    return p + T(-1) * q;
  }
  friend BasicUniPoly operator*(const T& s, const BasicUniPoly& p) {
    std::vector<T> r = p.c_;
    for (auto& v : r) v *= s;
    return BasicUniPoly(std::move(r));
  }
  friend BasicUniPoly operator*(const BasicUniPoly& p, const BasicUniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return BasicUniPoly(std::move(r));
  }
  friend bool operator==(const BasicUniPoly&, const BasicUniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

struct Exponent {
  int i = 0;  // power of x1
  int j = 0;  // power of x2
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

template <class T>
class BasicBiPoly {
 public:
  using map_type = std::map<Exponent, T>;

  BasicBiPoly() = default;

  static BasicBiPoly constant(T c) { return monomial(0, 0, std::move(c)); }
  static BasicBiPoly monomial(int i, int j, T c = T(1)) {
    BasicBiPoly p;
    if (c != T(0)) p.terms_[{i, j}] = std::move(c);
    return p;
  }
  static BasicBiPoly x1() { return monomial(1, 0); }
  static BasicBiPoly x2() { return monomial(0, 1); }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  T coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? T(0) : it->second;
  }

  // −1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.i + e.j);
    return d;
  }

  template <class X>
  X operator()(X x, X y) const {
    // Horner in x2 per x1-power, then in x1.
    int max_i = 0;
    for (const auto& [e, c] : terms_) max_i = std::max(max_i, e.i);
    std::vector<X> by_i(static_cast<std::size_t>(max_i) + 1, X(0));
    std::vector<X> ypow{X(1)};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(ypow.size()) <= e.j) ypow.push_back(ypow.back() * y);
      by_i[e.i] += X(c) * ypow[e.j];
    }
    X acc = X(0);
    for (auto it = by_i.rbegin(); it != by_i.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // ∂/∂x1 (var = 0) or ∂/∂x2 (var = 1)
  BasicBiPoly partial(int var) const {
    BasicBiPoly r;
    for (const auto& [e, c] : terms_) {
      const int p = var == 0 ? e.i : e.j;
      if (p == 0) continue;
      Exponent ne = var == 0 ? Exponent{e.i - 1, e.j} : Exponent{e.i, e.j - 1};
      r.add_term(ne, c * T(p));
    }
    return r;
  }

  BasicBiPoly& operator+=(const BasicBiPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  BasicBiPoly& operator-=(const BasicBiPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, T(-1) * c);
    return *this;
  }
  friend BasicBiPoly operator+(BasicBiPoly p, const BasicBiPoly& q) { return p += q; }
  friend BasicBiPoly operator-(BasicBiPoly p, const BasicBiPoly& q) { return p -= q; }
  friend BasicBiPoly operator*(const T& s, const BasicBiPoly& p) {
    BasicBiPoly r;
    if (s == T(0)) return r;
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }
  friend BasicBiPoly operator*(const BasicBiPoly& p, const BasicBiPoly& q) {
    BasicBiPoly r;
    for (const auto& [e1, c1] : p.terms_)
      for (const auto& [e2, c2] : q.terms_) r.add_term({e1.i + e2.i, e1.j + e2.j}, c1 * c2);
    return r;
  }
  friend bool operator==(const BasicBiPoly&, const BasicBiPoly&) = default;

  void add_term(Exponent e, const T& c) {
    if (c == T(0)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == T(0)) terms_.erase(it);
    }
  }

 private:
  map_type terms_;
};

using UniPoly = BasicUniPoly<double>;
using BiPoly = BasicBiPoly<double>;
using RationalUniPoly = BasicUniPoly<Rational>;
using RationalBiPoly = BasicBiPoly<Rational>;

// Largest |coefficient|; 0 for the zero polynomial.
double max_abs_coeff(const BiPoly& p);

// Drops coefficients with |c| ≤ rel_tol·max|c|. The only place float
// polynomials lose terms; callers invoke it at explicit normalization points.
BiPoly pruned(const BiPoly& p, double rel_tol = 1e-12);

// True when every coefficient is ≤ abs_tol in magnitude.
bool is_numerically_zero(const BiPoly& p, double abs_tol);

class DirectionalOp {
 public:
  explicit DirectionalOp(Vec2 direction) : d_(direction) {
    if (direction.x == 0.0 && direction.y == 0.0)
      throw error(errc::precondition_violation, "directional operator with zero direction");
  }
  Vec2 direction() const { return d_; }

 private:
  Vec2 d_;
};

// a1·∂p/∂x1 + a2·∂p/∂x2
BiPoly apply_directional(const DirectionalOp& op, const BiPoly& p);

// scale·⟨∇,a¹⟩⟨∇,a²⟩⟨∇,a³⟩⟨∇,a⁴⟩ p
BiPoly apply_L(const CharacteristicSystem& sys, const BiPoly& p);

// Σ a_k ∂⁴p / ∂x1^(4−k) ∂x2^k, exact over T.
template <class T>
BasicBiPoly<T> apply_coefficient_form(const std::array<T, 5>& a, const BasicBiPoly<T>& p) {
  BasicBiPoly<T> result;
  for (int k = 0; k <= 4; ++k) {
    if (a[k] == T(0)) continue;
    BasicBiPoly<T> d = p;
    for (int r = 0; r < 4 - k; ++r) d = d.partial(0);
    for (int r = 0; r < k; ++r) d = d.partial(1);
    result += a[k] * d;
  }
  return result;
}

BiPoly apply_coefficient_form(const QuarticSymbol& sym, const BiPoly& p);

// T_q by T₀ = 1, T₁ = z, T_q = 2z·T_{q−1} − T_{q−2}.
template <class T = double>
BasicUniPoly<T> chebyshev(int q) {
  if (q < 0) throw error(errc::precondition_violation, "Chebyshev degree must be nonnegative");
  BasicUniPoly<T> prev = BasicUniPoly<T>::monomial(0);
  if (q == 0) return prev;
  BasicUniPoly<T> cur = BasicUniPoly<T>::monomial(1);
  const BasicUniPoly<T> two_z = BasicUniPoly<T>::monomial(1, T(2));
  for (int k = 2; k <= q; ++k) {
    BasicUniPoly<T> next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Q(⟨b, x⟩) expanded.
template <class T>
BasicBiPoly<T> compose_linear(const BasicUniPoly<T>& q, const std::array<T, 2>& b) {
  const auto lin = BasicBiPoly<T>::monomial(1, 0, b[0]) + BasicBiPoly<T>::monomial(0, 1, b[1]);
  // Horner: (((c_n)·lin + c_{n−1})·lin + ...)
  BasicBiPoly<T> acc;
  for (int k = q.degree(); k >= 0; --k) acc = acc * lin + BasicBiPoly<T>::constant(q[k]);
  return acc;
}

inline BiPoly compose_linear(const UniPoly& q, Vec2 b) {
  return compose_linear<double>(q, std::array<double, 2>{b.x, b.y});
}

struct RidgeTerm {
  int direction = 0;  // characteristic index j (0-based)
  int degree = 0;     // k in z^k
  BiPoly poly;        // (−ãʲ·x)^k
};

// Ridge monomials (−ãʲ·x)^k, 0 ≤ k ≤ D, with linearly dependent low-degree
// repeats removed. Each element is annihilated by apply_L.
std::vector<RidgeTerm> kernel_Lplus_basis(const CharacteristicSystem& sys, int max_degree);

}  // namespace qhyp
