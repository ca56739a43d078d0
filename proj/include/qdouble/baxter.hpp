#pragma once

/**
 * @file baxter.hpp
 * @brief Spectral-parameter solutions built from a constant braid matrix.
 *
 * Multiplicative solutions (x = e^u) are matrices of Laurent polynomials and are checked
 * exactly in two variables:
 *
 *     Rc12(x) Rc23(xz) Rc12(z) = Rc23(z) Rc12(xz) Rc23(x).
 *
 * Additive solutions (entries such as e^u) are checked by sampling
 *
 *     Rc12(u) Rc23(u+v) Rc12(v) = Rc23(v) Rc12(u+v) Rc23(u).
 */

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qdouble/laurent.hpp"
#include "qdouble/linalg.hpp"
#include "qdouble/scalars.hpp"
#include "qdouble/ybe.hpp"

namespace qdouble {

struct SpectralRMatrix {
  int site_dim = 0;
  LaurentMatrix entries;  // braid form, in x = e^u
  std::string source;
};

struct AnsatzCoefficients {
  Laurent1 f, g, h;
};

// ---- the three-eigenvalue ansatz ----------------------------------------------

struct AnsatzCandidate {
  std::array<int, 3> ordering{};  // indices into the clustered spectrum
  std::array<Scalar, 3> lambda{};
  AnsatzCoefficients coeffs;
  SpectralRMatrix matrix;
};

namespace detail {

inline Matrix checked_inverse(const Matrix& m, double tol) {
  const Matrix inv = m.partialPivLu().inverse();
  if (max_abs(m * inv - identity(m.rows())) > tol) throw std::domain_error("braid matrix is singular");
  if (unitarity_residual(m) <= tol && max_abs(inv - m.adjoint()) > tol) {
    throw std::logic_error("inverse and adjoint disagree for a unitary braid matrix");
  }
  return inv;
}

inline EigenSummary three_eigenvalues(const Matrix& braid, const Tolerances& tol) {
  const EigenSummary s = eigen_analysis(braid, tol.eig_cluster_tol);
  if (s.values.size() != 3) {
    throw WrongEigenvalueCount("ansatz needs 3 distinct eigenvalues, found " + std::to_string(s.values.size()));
  }
  return s;
}

}  // namespace detail

/// f I + g Rc + h Rc^-1 as a Laurent matrix.
inline SpectralRMatrix combine(const Matrix& braid, const AnsatzCoefficients& c, const Tolerances& tol = {},
                               std::string source = "ansatz") {
  const Matrix inv = detail::checked_inverse(braid, tol.entry_tol);
  const auto n = static_cast<std::size_t>(braid.rows());
  LaurentMatrix m(n, n, Laurent1({"x"}));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      Laurent1 e = (r == col ? c.f : Laurent1({"x"})) + braid(r, col) * c.g + inv(r, col) * c.h;
      m(r, col) = std::move(e);
    }
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return {d, std::move(m), std::move(source)};
}

/// (l1 + l2 + l3 + l1 l3 / l2) x I - (x - 1) Rc + l1 l3 x (x - 1) Rc^-1.
inline AnsatzCoefficients ansatz_coefficients(const std::array<Scalar, 3>& l) {
  const Scalar l13 = l[0] * l[2];
  return {lx(l[0] + l[1] + l[2] + l13 / l[1]), laurent1({{0, 1.0}, {1, -1.0}}), laurent1({{2, l13}, {1, -l13}})};
}

inline AnsatzCandidate eigenvalue_ansatz(const Matrix& braid, const std::array<int, 3>& ordering, const Tolerances& tol = {}) {
  const EigenSummary s = detail::three_eigenvalues(braid, tol);
  AnsatzCandidate c;
  c.ordering = ordering;
  for (int i = 0; i < 3; ++i) c.lambda[i] = s.values.at(ordering[i]);
  c.coeffs = ansatz_coefficients(c.lambda);
  c.matrix = combine(braid, c.coeffs, tol);
  return c;
}

/// True when a = p b for a scalar Laurent polynomial p (cross-multiplication test).
inline bool proportional_laurent(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::optional<std::pair<std::size_t, std::size_t>> pivot;
  for (std::size_t r = 0; r < a.rows() && !pivot; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !b(r, c).is_zero()) {
        pivot = {r, c};
        break;
      }
  if (!pivot) return a.is_zero() && b.is_zero();
  const Laurent1& ap = a(pivot->first, pivot->second);
  const Laurent1& bp = b(pivot->first, pivot->second);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a(r, c) * bp - b(r, c) * ap).is_zero()) return false;
  return true;
}

/// All six orderings, with scalar-multiple duplicates removed.
inline std::vector<AnsatzCandidate> enumerate_candidates(const Matrix& braid, const Tolerances& tol = {}) {
  detail::three_eigenvalues(braid, tol);
  std::array<int, 3> ord{0, 1, 2};
  std::vector<AnsatzCandidate> out;
  do {
    AnsatzCandidate c = eigenvalue_ansatz(braid, ord, tol);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const AnsatzCandidate& o) {
      return proportional_laurent(o.matrix.entries, c.matrix.entries);
    });
    if (!dup) out.push_back(std::move(c));
  } while (std::next_permutation(ord.begin(), ord.end()));
  return out;
}

// ---- exact braid YBE -------------------------------------------------------------

inline Laurent2Matrix lift_matrix(const LaurentMatrix& m, Lift where) {
  Laurent2Matrix out(m.rows(), m.cols(), Laurent2({"x", "z"}));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = lift(m(r, c), where);
  return out;
}

/// Max coefficient of Rc12(x) Rc23(xz) Rc12(z) - Rc23(z) Rc12(xz) Rc23(x).
inline double check_braid_ybe_laurent(const SpectralRMatrix& rx) {
  const int d = rx.site_dim;
  auto on = [&](Lift w, int p, int q) { return embed_pair(lift_matrix(rx.entries, w), d, 3, p, q); };
  const Laurent2Matrix lhs = on(Lift::First, 0, 1) * on(Lift::Product, 1, 2) * on(Lift::Second, 0, 1);
  const Laurent2Matrix rhs = on(Lift::Second, 1, 2) * on(Lift::Product, 0, 1) * on(Lift::First, 1, 2);
  return (lhs - rhs).max_abs_coeff();
}

/// Rc(x) Rc(1/x) and its deviation from a scalar multiple of the identity.
struct UnitarityResult {
  Laurent1 scalar;
  double residual = 0.0;
};

inline UnitarityResult unitarity(const SpectralRMatrix& rx) {
  const LaurentMatrix prod = rx.entries * rx.entries.map([](const Laurent1& p) { return substitute_inverse(p); });
  UnitarityResult u{prod(0, 0), 0.0};
  const auto id = LaurentMatrix::identity(prod.rows(), Laurent1({"x"}));
  u.residual = (prod - u.scalar * id).max_abs_coeff();
  return u;
}

/// Rc(1) = c I; returns c and the deviation.
inline std::pair<Scalar, double> regularity(const SpectralRMatrix& rx) { return identity_multiple(evaluate(rx.entries, 1.0)); }

// ---- closed forms ---------------------------------------------------------------------

/// The symmetric-gauge six-vertex matrix with q = w^j, w = exp(2 pi i / n).
inline SpectralRMatrix six_vertex_solution(int n, int j) {
  if (n < 3 || j <= 0 || j >= n || 2 * j == n) {
    throw std::invalid_argument("six_vertex_solution: need n >= 3 and 0 < j < n with j != n/2");
  }
  const Scalar w2 = root_of_unity(n, 2 * j), w2i = root_of_unity(n, -2 * j);
  LaurentMatrix m(4, 4, Laurent1({"x"}));
  m(0, 0) = m(3, 3) = laurent1({{-1, w2}, {1, -w2i}});
  m(1, 1) = m(2, 2) = laurent1({{0, w2 - w2i}});
  m(1, 2) = m(2, 1) = laurent1({{-1, 1.0}, {1, -1.0}});
  return {2, std::move(m), "sixvertex:n=" + std::to_string(n) + ",j=" + std::to_string(j)};
}

/// The 21-vertex braid matrix in x.
inline SpectralRMatrix twenty_one_vertex_solution() {
  const Laurent1 d = laurent1({{2, 1.0}, {1, -1.0}, {0, 1.0}});  // x^2 - x + 1
  const Laurent1 x = lx();
  const Laurent1 omx = laurent1({{0, 1.0}, {1, -1.0}});  // 1 - x
  const Laurent1 xxm = laurent1({{2, 1.0}, {1, -1.0}});  // x (x - 1)
  LaurentMatrix m(9, 9, Laurent1({"x"}));
  m(0, 0) = m(4, 4) = m(8, 8) = d;
  m(1, 1) = m(2, 2) = m(3, 3) = m(5, 5) = m(6, 6) = m(7, 7) = x;
  m(1, 5) = m(2, 7) = m(3, 2) = m(5, 6) = m(6, 1) = m(7, 3) = omx;
  m(1, 6) = m(2, 3) = m(3, 7) = m(5, 1) = m(6, 5) = m(7, 2) = xxm;
  return {3, std::move(m), "21vertex"};
}

/// R(x) = P Rc(x).
inline LaurentMatrix r_form(const SpectralRMatrix& rx) {
  return to_laurent(swap_matrix(rx.site_dim)) * rx.entries;
}

// ---- Laurent limits -------------------------------------------------------------------

enum class LimitDirection { ToZero, ToInfinity };

/// Coefficient matrix of the dominant power of x as x -> 0 (lowest) or x -> infinity (highest).
inline std::pair<Matrix, int> infinite_limit(const SpectralRMatrix& rx, LimitDirection dir = LimitDirection::ToZero) {
  std::optional<int> e;
  for (std::size_t r = 0; r < rx.entries.rows(); ++r)
    for (std::size_t c = 0; c < rx.entries.cols(); ++c) {
      const Laurent1& p = rx.entries(r, c);
      if (p.is_zero()) continue;
      const int k = dir == LimitDirection::ToZero ? min_exponent(p) : max_exponent(p);
      if (!e || (dir == LimitDirection::ToZero ? k < *e : k > *e)) e = k;
    }
  if (!e) throw NoFiniteLimit("infinite_limit: zero matrix");
  Matrix out(rx.entries.rows(), rx.entries.cols());
  for (std::size_t r = 0; r < rx.entries.rows(); ++r)
    for (std::size_t c = 0; c < rx.entries.cols(); ++c) out(r, c) = rx.entries(r, c).coeff({*e});
  return {out, *e};
}

// ---- two-dimensional functional relations ------------------------------------------------

struct TwoDimFunctions {
  Laurent1 a, b, f;
};

/// Reads A = Rc(0,0), f = Rc(1,1), B = Rc(1,2) from a 4x4 braid matrix of the six-vertex shape.
inline TwoDimFunctions two_dim_functions(const SpectralRMatrix& rx) {
  if (rx.site_dim != 2) throw std::invalid_argument("two_dim_functions: site dimension must be 2");
  return {rx.entries(0, 0), rx.entries(1, 2), rx.entries(1, 1)};
}

struct FunctionalResiduals {
  std::vector<std::pair<std::string, double>> relations;
  double worst() const {
    double w = 0.0;
    for (const auto& [n, r] : relations) w = std::max(w, r);
    return w;
  }
};

/// A(z) f(xz) A(x) = f(x) A(xz) f(z) + B(x) f(xz) B(z),
/// A(z) B(xz) f(x) = f(x) A(xz) B(z) + B(x) f(xz) f(z).
inline FunctionalResiduals functional_residuals(const TwoDimFunctions& fn) {
  auto at = [](const Laurent1& p, Lift w) { return lift(p, w); };
  const Laurent2 ax = at(fn.a, Lift::First), az = at(fn.a, Lift::Second), axz = at(fn.a, Lift::Product);
  const Laurent2 bx = at(fn.b, Lift::First), bz = at(fn.b, Lift::Second), bxz = at(fn.b, Lift::Product);
  const Laurent2 fx = at(fn.f, Lift::First), fz = at(fn.f, Lift::Second), fxz = at(fn.f, Lift::Product);
  const Laurent2 afa = az * fxz * ax - fx * axz * fz - bx * fxz * bz;
  const Laurent2 abf = az * bxz * fx - fx * axz * bz - bx * fxz * fz;
  return {{{"AfA", afa.max_abs_coeff()}, {"ABf", abf.max_abs_coeff()}}};
}

// ---- additive solutions -------------------------------------------------------------------

using ScalarFn = std::function<Scalar(Scalar)>;

/// Entry functions of the A_4 form: a on the fixed diagonal, f on the rest of the diagonal,
/// +-b on the off-diagonal pattern of the normalized constant braid matrix.
struct A4Functions {
  ScalarFn a, b, f;
};

struct AdditiveSolution {
  std::string family;  // exponential-diagonal | linear-twist | hecke-linear
  std::map<std::string, Scalar> params;
  int site_dim = 3;
  std::function<Matrix(Scalar)> evaluator;
  std::optional<A4Functions> functions;
  Matrix source_braid;  // the constant matrix the family was built from
  bool regular = true;
  std::string note;
};

/// max entry of Rc12(u) Rc23(u+v) Rc12(v) - Rc23(v) Rc12(u+v) Rc23(u) over random |u|, |v| <= 2.
inline double check_braid_ybe_numeric(const std::function<Matrix(Scalar)>& rc, int d, int samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * std::numbers::pi);
  auto draw = [&] { return std::polar(2.0 * std::sqrt(radius(rng)), angle(rng)); };
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Scalar u = draw(), v = draw();
    const Matrix ru = rc(u), rv = rc(v), ruv = rc(u + v);
    const Matrix lhs = embed_pair(ru, d, 3, 0, 1) * embed_pair(ruv, d, 3, 1, 2) * embed_pair(rv, d, 3, 0, 1);
    const Matrix rhs = embed_pair(rv, d, 3, 1, 2) * embed_pair(ruv, d, 3, 0, 1) * embed_pair(ru, d, 3, 1, 2);
    worst = std::max(worst, max_abs(lhs - rhs));
  }
  return worst;
}

inline double check_braid_ybe_numeric(const AdditiveSolution& sol, int samples, std::uint32_t seed) {
  return check_braid_ybe_numeric(sol.evaluator, sol.site_dim, samples, seed);
}

/// (b), (A1), (A2) at random sample points.
inline FunctionalResiduals functional_residuals(const A4Functions& fn, int samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * std::numbers::pi);
  auto draw = [&] { return std::polar(2.0 * std::sqrt(radius(rng)), angle(rng)); };
  double rb = 0.0, ra1 = 0.0, ra2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Scalar u = draw(), v = draw(), w = u + v;
    const Scalar au = fn.a(u), av = fn.a(v), aw = fn.a(w);
    const Scalar bu = fn.b(u), bv = fn.b(v), bw = fn.b(w);
    const Scalar fu = fn.f(u), fv = fn.f(v), fw = fn.f(w);
    rb = std::max(rb, std::abs(bw * fu * fv - fw * (bu * fv + bv * fu)));
    ra1 = std::max(ra1, std::abs(au * bw * fv - bv * fu * fw - aw * bu * fv));
    ra2 = std::max(ra2, std::abs(aw * fu * fv - fw * (au * av + bu * bv)));
  }
  return {{{"b", rb}, {"A1", ra1}, {"A2", ra2}}};
}

/// Normalized constant braid matrix for D(A_4) irreps with a = 1: -Rc, whose diagonal is +1.
inline Matrix a4_normalized_braid(int b) {
  const auto rep = find_irrep("alternating:4/(12)(34)/a1b" + std::to_string(b));
  return -build_r(rep).braid;
}

/// f (I - E) + a E + b O, with E the diagonal part of `pattern` and O the rest.
inline Matrix a4_matrix(const Matrix& pattern, Scalar a, Scalar b, Scalar f) {
  Matrix e = Matrix::Zero(pattern.rows(), pattern.cols());
  for (Eigen::Index i = 0; i < pattern.rows(); ++i) e(i, i) = pattern(i, i);
  const Matrix o = pattern - e;
  return f * (identity(pattern.rows()) - e) + a * e + b * o;
}

inline AdditiveSolution a4_family(const Matrix& pattern, A4Functions fn, std::string family,
                                  std::map<std::string, Scalar> params) {
  AdditiveSolution s;
  s.family = std::move(family);
  s.params = std::move(params);
  s.source_braid = pattern;
  s.functions = fn;
  s.evaluator = [pattern, fn](Scalar u) { return a4_matrix(pattern, fn.a(u), fn.b(u), fn.f(u)); };
  return s;
}

inline AdditiveSolution exponential_diagonal(const Matrix& pattern) {
  A4Functions fn{[](Scalar u) { return std::exp(u); }, [](Scalar) { return Scalar{}; }, [](Scalar) { return Scalar{1.0}; }};
  return a4_family(pattern, fn, "exponential-diagonal", {});
}

/// f = 1, b = b0 u, a = 1 + c u; a solution exactly when c = +-i b0.
inline AdditiveSolution linear_twist(const Matrix& pattern, Scalar b0, Scalar c) {
  A4Functions fn{[c](Scalar u) { return 1.0 + c * u; }, [b0](Scalar u) { return b0 * u; }, [](Scalar) { return Scalar{1.0}; }};
  return a4_family(pattern, fn, "linear-twist", {{"b0", b0}, {"c", c}});
}

/// I + u Rc, for braid matrices satisfying a Hecke-type relation.
inline AdditiveSolution hecke_linear(const Matrix& braid, std::string note = {}) {
  AdditiveSolution s;
  s.family = "hecke-linear";
  s.site_dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(braid.rows()))));
  s.source_braid = braid;
  s.evaluator = [braid](Scalar u) { return Matrix(identity(braid.rows()) + u * braid); };
  s.note = std::move(note);
  return s;
}

/// Spectral solutions attached to the three-dimensional D(A_4) irreps.
inline std::vector<AdditiveSolution> a4_solutions(int a, int b) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw std::invalid_argument("a4_solutions: a, b must be 0 or 1");
  if (a == 0) {
    const Matrix braid = build_r(find_irrep("alternating:4/(12)(34)/a0b" + std::to_string(b))).braid;
    return {hecke_linear(braid, b == 0 ? "permutation matrix; rational su(3)-invariant solution"
                                       : "Hecke representation; rational 15-vertex solution with a twist")};
  }
  // The off-diagonal pattern of -Rc(a=1,b) flips sign with b, so b0 carries that sign.
  const Matrix pattern = a4_normalized_braid(b);
  const Scalar b0 = b == 1 ? kI : -kI;
  return {exponential_diagonal(pattern), linear_twist(pattern, b0, 1.0)};
}

// ---- additive limits ----------------------------------------------------------------------

struct LimitResult {
  Matrix limit;
  double proportionality = 0.0;  // residual against the reference, 0 = proportional
};

/// lim Rc(u) / (its entry of largest modulus) as u -> -infinity (or +infinity), with a
/// convergence check between |u| = 1e4 and 1e6.
inline Matrix additive_limit(const std::function<Matrix(Scalar)>& rc, bool to_minus_infinity = true) {
  const double sgn = to_minus_infinity ? -1.0 : 1.0;
  const Matrix m1 = rc(sgn * 1e4), m2 = rc(sgn * 1e6);
  for (const Matrix* m : {&m1, &m2})
    for (Eigen::Index i = 0; i < m->size(); ++i)
      if (!is_finite(m->data()[i])) throw NoFiniteLimit("additive_limit: entries overflow");
  Eigen::Index r = 0, c = 0;
  m1.cwiseAbs().maxCoeff(&r, &c);
  if (m1(r, c) == Scalar{} || m2(r, c) == Scalar{}) throw NoFiniteLimit("additive_limit: vanishing matrix");
  const Matrix n1 = m1 / m1(r, c), n2 = m2 / m2(r, c);
  if (max_abs(n1 - n2) > 1e-3) throw NoFiniteLimit("additive_limit: normalized matrix does not converge");
  return n2;
}

inline LimitResult additive_limit_against(const AdditiveSolution& sol, bool to_minus_infinity = true) {
  LimitResult out;
  out.limit = additive_limit(sol.evaluator, to_minus_infinity);
  out.proportionality = proportionality_residual(out.limit, sol.source_braid);
  return out;
}

inline LimitResult laurent_limit_against(const SpectralRMatrix& rx, const Matrix& braid,
                                         LimitDirection dir = LimitDirection::ToZero) {
  LimitResult out;
  out.limit = infinite_limit(rx, dir).first;
  out.proportionality = proportionality_residual(out.limit, braid);
  return out;
}

}  // namespace qdouble
