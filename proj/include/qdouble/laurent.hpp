#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in one or two variables and small matrices of them.
 *
 * Coefficients whose magnitude is at most the drop tolerance are removed after every
 * operation, so an identity p == q holds exactly when (p - q) normalizes to the empty
 * polynomial.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/scalars.hpp"

namespace qdouble {

inline constexpr double kDropTol = 1e-9;

template <std::size_t N>
class Laurent {
public:
  using Exponent = std::array<int, N>;
  using Names = std::array<std::string, N>;
  using Terms = std::map<Exponent, Scalar>;

  Laurent() { names_.fill("x"); if constexpr (N == 2) names_[1] = "z"; }
  explicit Laurent(Names names) : names_(std::move(names)) {}
  Laurent(Names names, Terms terms, double tol = kDropTol)
      : names_(std::move(names)), terms_(std::move(terms)) {
    normalize(tol);
  }

  static Laurent constant(Scalar c, Names names) { return monomial(c, Exponent{}, std::move(names)); }
  static Laurent monomial(Scalar c, Exponent e, Names names) {
    Terms t;
    t[e] = c;
    return Laurent(std::move(names), std::move(t));
  }

  const Names& names() const { return names_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  Laurent& normalize(double tol = kDropTol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (!is_finite(it->second)) {
        throw std::domain_error("Laurent: non-finite coefficient");
      }
      if (std::abs(it->second) <= tol) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  Laurent& operator+=(const Laurent& o) {
    check_names(o);
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    return normalize();
  }
  Laurent& operator-=(const Laurent& o) {
    check_names(o);
    for (const auto& [e, c] : o.terms_) terms_[e] -= c;
    return normalize();
  }
  Laurent& operator*=(Scalar s) {
    for (auto& [e, c] : terms_) c *= s;
    return normalize();
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, Scalar s) { return a *= s; }
  friend Laurent operator*(Scalar s, Laurent a) { return a *= s; }
  friend Laurent operator-(Laurent a) { return a *= Scalar{-1.0}; }

  /// Exponent-wise convolution.
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_names(b);
    Terms out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out[e] += ca * cb;
      }
    }
    return Laurent(a.names_, std::move(out));
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.names_ == b.names_ && (a - b).is_zero();
  }

  void check_names(const Laurent& o) const {
    if (names_ != o.names_) {
      throw std::invalid_argument("Laurent: mismatched variables");
    }
  }

private:
  Names names_;
  Terms terms_;
};

using Laurent1 = Laurent<1>;
using Laurent2 = Laurent<2>;

// ---- one-variable helpers ------------------------------------------------

inline Laurent1 lx(Scalar c = 1.0, int e = 1, const std::string& var = "x") {
  return Laurent1::monomial(c, {e}, {var});
}

/// Builds sum c_k x^k from (exponent, coefficient) pairs.
inline Laurent1 laurent1(std::initializer_list<std::pair<int, Scalar>> terms, const std::string& var = "x") {
  Laurent1::Terms t;
  for (const auto& [e, c] : terms) t[{e}] += c;
  return Laurent1({var}, std::move(t));
}

inline Scalar laurent_eval(const Laurent1& p, Scalar x0) {
  Scalar sum{};
  for (const auto& [e, c] : p.terms()) {
    if (x0 == Scalar{} && e[0] < 0) {
      throw std::invalid_argument("laurent_eval: zero argument with negative exponents");
    }
    sum += c * std::pow(x0, e[0]);
  }
  return sum;
}

inline Laurent1 laurent_derivative(const Laurent1& p) {
  Laurent1::Terms t;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] != 0) t[{e[0] - 1}] += c * static_cast<double>(e[0]);
  }
  return Laurent1(p.names(), std::move(t));
}

/// x -> 1/x.
inline Laurent1 substitute_inverse(const Laurent1& p) {
  Laurent1::Terms t;
  for (const auto& [e, c] : p.terms()) t[{-e[0]}] += c;
  return Laurent1(p.names(), std::move(t));
}

inline int min_exponent(const Laurent1& p) { return p.terms().begin()->first[0]; }
inline int max_exponent(const Laurent1& p) { return p.terms().rbegin()->first[0]; }

enum class Lift { First, Second, Product };

/// Reads p(x) as p(x), p(z) or p(xz) in the two variables (x, z).
inline Laurent2 lift(const Laurent1& p, Lift where, const std::array<std::string, 2>& names = {"x", "z"}) {
  Laurent2::Terms t;
  for (const auto& [e, c] : p.terms()) {
    const int n = e[0];
    switch (where) {
      case Lift::First: t[{n, 0}] += c; break;
      case Lift::Second: t[{0, n}] += c; break;
      case Lift::Product: t[{n, n}] += c; break;
    }
  }
  return Laurent2(names, std::move(t));
}

// ---- matrices with polynomial entries -------------------------------------

template <class P>
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, P zero = P{})
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const P& zero() const { return zero_; }

  P& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const P& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static PolyMatrix identity(std::size_t n, P zero = P{}) {
    PolyMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = P::constant(1.0, zero.names());
    return m;
  }

  template <class F>
  PolyMatrix map(F&& f) const {
    PolyMatrix out(rows_, cols_, f(zero_));
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f(data_[i]);
    return out;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const P& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const P& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend PolyMatrix operator*(const P& s, PolyMatrix a) {
    for (auto& e : a.data_) e = s * e;
    return a;
  }
  friend PolyMatrix operator*(Scalar s, PolyMatrix a) {
    for (auto& e : a.data_) e *= s;
    return a;
  }

  /// Largest coefficient magnitude over all entries.
  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& e : data_) m = std::max(m, e.max_abs_coeff());
    return m;
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const P& p) { return !p.is_zero(); }));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const P& p) { return p.is_zero(); });
  }

private:
  void check_shape(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  P zero_{};
  std::vector<P> data_;
};

using LaurentMatrix = PolyMatrix<Laurent1>;
using Laurent2Matrix = PolyMatrix<Laurent2>;

}  // namespace qdouble
