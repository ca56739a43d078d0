#pragma once

/**
 * @file scalars.hpp
 * @brief Complex scalars, roots of unity, tolerances and the library's error types.
 */

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdouble {

using Scalar = std::complex<double>;

inline constexpr Scalar kI{0.0, 1.0};

/// Numerical thresholds shared by every identity check.
struct Tolerances {
  double entry_tol = 1e-9;
  double eig_cluster_tol = 1e-6;

  Tolerances() = default;
  Tolerances(double entry, double cluster) : entry_tol(entry), eig_cluster_tol(cluster) {
    if (!(entry > 0.0) || !(cluster > 0.0)) {
      throw std::invalid_argument("tolerances must be strictly positive");
    }
  }
};

// Error kinds. Plain invalid arguments use std::invalid_argument.
struct UnsupportedCentralizer : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongEigenvalueCount : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoFiniteLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Scalar z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// exp(2 pi i power / order), with power reduced mod order first. Quarter and half
/// turns come out exact.
inline Scalar root_of_unity(int order, int power) {
  if (order < 1) {
    throw std::invalid_argument("root_of_unity: order must be >= 1");
  }
  const long k = floor_mod(power, order);
  // Exact values on the axes; everything else goes through sincos.
  if (k == 0) return {1.0, 0.0};
  if (2 * k == order) return {-1.0, 0.0};
  if (4 * k == order) return {0.0, 1.0};
  if (4 * k == 3L * order) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order;
  return {std::cos(angle), std::sin(angle)};
}

inline Scalar sign_power(int exponent) { return (floor_mod(exponent, 2) == 0) ? 1.0 : -1.0; }

/// Rounds to 12 significant digits, the precision used for every printed number.
inline double round_sig12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::stod(buf);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

}  // namespace qdouble
