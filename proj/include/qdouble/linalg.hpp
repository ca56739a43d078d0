#pragma once

/**
 * @file linalg.hpp
 * @brief Dense complex matrices and the multi-site index convention.
 *
 * Index convention: in a product of sites V_1 (x) V_2 (x) ... (x) V_L the FIRST site is
 * the fastest-varying index, i.e. basis state (i_1, ..., i_L) sits at
 * i_1 + d_1 i_2 + d_1 d_2 i_3 + ...  Consequently
 *
 *     tensor(A, B)(k dA + i, l dA + j) = A(i, j) B(k, l).
 *
 * The reference two-site R-matrices, braid matrices and Hamiltonians in the tests are
 * written in this layout. All embeddings (R12, R13, R23, chain terms) use it.
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qdouble/laurent.hpp"
#include "qdouble/scalars.hpp"

namespace qdouble {

using Matrix = Eigen::MatrixXcd;

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

/// Two-factor product, first factor fast.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  Matrix out = Matrix::Zero(ra * b.rows(), ca * b.cols());
  for (Eigen::Index k = 0; k < b.rows(); ++k)
    for (Eigen::Index l = 0; l < b.cols(); ++l) {
      const Scalar bkl = b(k, l);
      if (bkl == Scalar{}) continue;
      out.block(k * ra, l * ca, ra, ca) = bkl * a;
    }
  return out;
}

inline Matrix tensor(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor: no factors");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

/// The swap P(x (x) y) = y (x) x on C^d (x) C^d.
inline Matrix swap_matrix(int d) {
  Matrix p = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) p(i + d * k, k + d * i) = 1.0;
  return p;
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double commutator_residual(const Matrix& a, const Matrix& b) { return max_abs(a * b - b * a); }

inline long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace detail {

inline bool entry_is_zero(const Scalar& s) { return s == Scalar{}; }
template <class P>
bool entry_is_zero(const P& p) {
  return p.is_zero();
}

// Shared embedding kernel for Eigen and polynomial matrices.
template <class M, class Zero, class Get, class Add>
void embed_pair_impl(const M& op, int d, int sites, int p, int q, Zero&& make_out, Get&& get, Add&& add) {
  if (p == q || p < 0 || q < 0 || p >= sites || q >= sites) {
    throw std::invalid_argument("embed_pair: bad site pair");
  }
  const long dim = ipow(d, sites);
  const long wp = ipow(d, p), wq = ipow(d, q);
  make_out(dim);
  for (long col = 0; col < dim; ++col) {
    const int ip = static_cast<int>((col / wp) % d);
    const int iq = static_cast<int>((col / wq) % d);
    const long rest = col - ip * wp - iq * wq;
    const int in = ip + d * iq;
    for (int op_p = 0; op_p < d; ++op_p)
      for (int op_q = 0; op_q < d; ++op_q) {
        const int out = op_p + d * op_q;
        const auto& v = get(op, out, in);
        if (entry_is_zero(v)) continue;
        add(rest + op_p * wp + op_q * wq, col, v);
      }
  }
}

}  // namespace detail

/// Places a two-site operator on sites (p, q) of an L-site chain (0-based sites). The
/// operator's first leg acts on site p.
inline Matrix embed_pair(const Matrix& op, int d, int sites, int p, int q) {
  Matrix out;
  detail::embed_pair_impl(
      op, d, sites, p, q, [&](long dim) { out = Matrix::Zero(dim, dim); },
      [](const Matrix& m, int r, int c) -> const Scalar& { return m(r, c); },
      [&](long r, long c, const Scalar& v) { out(r, c) += v; });
  return out;
}

template <class P>
PolyMatrix<P> embed_pair(const PolyMatrix<P>& op, int d, int sites, int p, int q) {
  PolyMatrix<P> out;
  detail::embed_pair_impl(
      op, d, sites, p, q, [&](long dim) { out = PolyMatrix<P>(dim, dim, op.zero()); },
      [](const PolyMatrix<P>& m, int r, int c) -> const P& { return m(r, c); },
      [&](long r, long c, const P& v) { out(r, c) += v; });
  return out;
}

using SparseMatrix = Eigen::SparseMatrix<Scalar>;

/// Sparse variant of embed_pair; entries of `op` with |v| <= drop are skipped.
inline SparseMatrix embed_pair_sparse(const Matrix& op, int d, int sites, int p, int q, double drop = 0.0) {
  std::vector<Eigen::Triplet<Scalar>> trips;
  long dim = 0;
  detail::embed_pair_impl(
      op, d, sites, p, q, [&](long n) { dim = n; },
      [](const Matrix& m, int r, int c) -> const Scalar& { return m(r, c); },
      [&](long r, long c, const Scalar& v) {
        if (std::abs(v) > drop) trips.emplace_back(r, c, v);
      });
  SparseMatrix out(dim, dim);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

inline double max_abs(const SparseMatrix& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) best = std::max(best, std::abs(it.value()));
  return best;
}

/// Traces out site 0 of a (sites)-site operator.
inline Matrix partial_trace_first(const Matrix& op, int d, int sites) {
  const long rest = ipow(d, sites - 1);
  Matrix out = Matrix::Zero(rest, rest);
  for (long r = 0; r < rest; ++r)
    for (long c = 0; c < rest; ++c) {
      Scalar s{};
      for (int a = 0; a < d; ++a) s += op(a + d * r, a + d * c);
      out(r, c) = s;
    }
  return out;
}

inline Matrix evaluate(const LaurentMatrix& m, Scalar x) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = laurent_eval(m(r, c), x);
  return out;
}

inline LaurentMatrix to_laurent(const Matrix& m, const std::string& var = "x") {
  LaurentMatrix out(m.rows(), m.cols(), Laurent1({var}));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Laurent1::constant(m(r, c), {var});
  return out;
}

/// Relative distance of `m` from the complex line through `ref`:
/// min_c max|m - c ref| / max|m|, with c the least-squares (Frobenius) fit.
inline double proportionality_residual(const Matrix& m, const Matrix& ref) {
  const double scale = max_abs(m);
  if (scale == 0.0) return 0.0;
  const Scalar denom = (ref.adjoint() * ref).trace();
  if (std::abs(denom) == 0.0) return 1.0;
  const Scalar c = (ref.adjoint() * m).trace() / denom;
  return max_abs(m - c * ref) / scale;
}

/// Returns c with m ~ c I, and the residual max|m - c I|.
inline std::pair<Scalar, double> identity_multiple(const Matrix& m) {
  const Scalar c = m.trace() / static_cast<double>(m.rows());
  return {c, max_abs(m - c * identity(m.rows()))};
}

}  // namespace qdouble
