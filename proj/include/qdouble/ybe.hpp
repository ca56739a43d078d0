#pragma once

/**
 * @file ybe.hpp
 * @brief Constant R-matrices R = sum_g pi(g) (x) pi(g*), the braid form PR, and the
 * identities they satisfy.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qdouble/doubles.hpp"
#include "qdouble/linalg.hpp"
#include "qdouble/reps.hpp"

namespace qdouble {

struct ConstantRMatrix {
  int site_dim = 0;
  Matrix r;
  Matrix braid;
  std::string source;
};

inline ConstantRMatrix build_r(const DoubleIrrep& rep) {
  const int d = rep.dim;
  ConstantRMatrix out{d, Matrix::Zero(d * d, d * d), Matrix(), rep.id()};
  for (Element g : rep.group->elements()) {
    if (rep.dual(g).isZero(0.0)) continue;
    out.r += tensor(rep(g), rep.dual(g));
  }
  out.braid = swap_matrix(d) * out.r;
  return out;
}

/// Wraps an externally supplied R (e.g. re-imported JSON).
inline ConstantRMatrix constant_from_r(const Matrix& r, std::string source = "matrix") {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r.rows()))));
  if (r.rows() != r.cols() || d * d != r.rows()) throw std::invalid_argument("R must be square of size d^2");
  return {d, r, swap_matrix(d) * r, std::move(source)};
}

/// max |R12 R13 R23 - R23 R13 R12|; sparse, since every R in scope is monomial.
inline double check_constant_ybe(const Matrix& r, int d) {
  const SparseMatrix r12 = embed_pair_sparse(r, d, 3, 0, 1);
  const SparseMatrix r13 = embed_pair_sparse(r, d, 3, 0, 2);
  const SparseMatrix r23 = embed_pair_sparse(r, d, 3, 1, 2);
  const SparseMatrix lhs = r12 * r13 * r23;
  const SparseMatrix rhs = r23 * r13 * r12;
  return max_abs(SparseMatrix(lhs - rhs));
}

inline double check_constant_ybe(const ConstantRMatrix& r) { return check_constant_ybe(r.r, r.site_dim); }

/// max |Rc12 Rc23 Rc12 - Rc23 Rc12 Rc23| for a braid-form matrix.
inline double check_constant_braid(const Matrix& braid, int d) {
  const SparseMatrix b12 = embed_pair_sparse(braid, d, 3, 0, 1);
  const SparseMatrix b23 = embed_pair_sparse(braid, d, 3, 1, 2);
  const SparseMatrix lhs = b12 * b23 * b12;
  const SparseMatrix rhs = b23 * b12 * b23;
  return max_abs(SparseMatrix(lhs - rhs));
}

struct QuasiTriangularity {
  double qt1 = 0.0;
  double qt2 = 0.0;
  double qt3 = 0.0;
};

/// (qt1) R Delta(a) = Delta^T(a) R over the whole basis, (qt2) (Delta (x) id) R = R13 R23,
/// (qt3) (id (x) Delta) R = R13 R12, all in pi (x) pi (x) pi.
inline QuasiTriangularity check_quasi_triangularity(const DoubleIrrep& rep) {
  const GroupPtr& g = rep.group;
  const int d = rep.dim;
  const ConstantRMatrix r = build_r(rep);
  QuasiTriangularity q;
  for (const auto& a : double_basis(g)) {
    const Matrix delta = represent(rep, coproduct(a));
    const Matrix delta_t = represent(rep, opposite_coproduct(a));
    q.qt1 = std::max(q.qt1, max_abs(r.r * delta - delta_t * r.r));
  }
  const DoubleTensor ur = universal_r(g);
  const Matrix r12 = embed_pair(r.r, d, 3, 0, 1);
  const Matrix r13 = embed_pair(r.r, d, 3, 0, 2);
  const Matrix r23 = embed_pair(r.r, d, 3, 1, 2);
  q.qt2 = max_abs(represent(rep, coproduct_on_leg(ur, 0)) - r13 * r23);
  q.qt3 = max_abs(represent(rep, coproduct_on_leg(ur, 1)) - r13 * r12);
  return q;
}

/// max over basis a of |[braid, (pi (x) pi) Delta(a)]|.
inline double check_symmetry(const Matrix& braid, const DoubleIrrep& rep) {
  double worst = 0.0;
  for (const auto& a : double_basis(rep.group))
    worst = std::max(worst, commutator_residual(braid, represent(rep, coproduct(a))));
  return worst;
}

inline double unitarity_residual(const Matrix& m) { return max_abs(m * m.adjoint() - identity(m.rows())); }

struct EigenSummary {
  std::vector<Scalar> values;
  std::vector<int> multiplicities;

  int total() const {
    int s = 0;
    for (int m : multiplicities) s += m;
    return s;
  }
  /// Multiplicity of the cluster at `v`, 0 if absent.
  int multiplicity_of(Scalar v, double tol = 1e-6) const {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (std::abs(values[i] - v) <= tol) return multiplicities[i];
    return 0;
  }
};

/// Spectrum clustered within `cluster_tol`, ordered by argument in [0, 2 pi) then modulus.
inline EigenSummary eigen_analysis(const Matrix& m, double cluster_tol = 1e-6) {
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen_analysis: eigensolver failed");
  std::vector<std::pair<Scalar, int>> clusters;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Scalar v = es.eigenvalues()(i);
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const auto& c) { return std::abs(c.first - v) <= cluster_tol; });
    if (it == clusters.end()) {
      clusters.emplace_back(v, 1);
    } else {
      // Running mean keeps the representative centred in its cluster.
      it->first = (it->first * static_cast<double>(it->second) + v) / static_cast<double>(it->second + 1);
      ++it->second;
    }
  }
  auto angle = [](Scalar v) {
    double a = std::arg(v);
    if (a < -1e-12) a += 2.0 * std::numbers::pi;
    return std::max(a, 0.0);
  };
  std::sort(clusters.begin(), clusters.end(), [&](const auto& x, const auto& y) {
    const double ax = angle(x.first), ay = angle(y.first);
    if (std::abs(ax - ay) > 1e-9) return ax < ay;
    return std::abs(x.first) < std::abs(y.first);
  });
  EigenSummary s;
  for (const auto& [v, k] : clusters) {
    s.values.push_back(v);
    s.multiplicities.push_back(k);
  }
  return s;
}

/// Searches diagonal sign matrices S (first entry +1) with (S (x) S) a (S (x) S) = b.
inline std::optional<std::vector<int>> find_sign_equivalence(const Matrix& a, const Matrix& b, int d, double tol = 1e-9) {
  if (d > 20) throw std::invalid_argument("find_sign_equivalence: site dimension too large");
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<int> signs(d, 1);
    Matrix s = Matrix::Identity(d, d);
    for (int i = 1; i < d; ++i)
      if (mask & (1u << (i - 1))) {
        signs[i] = -1;
        s(i, i) = -1.0;
      }
    const Matrix ss = tensor(s, s);
    if (max_abs(ss * a * ss - b) <= tol) return signs;
  }
  return std::nullopt;
}

}  // namespace qdouble
