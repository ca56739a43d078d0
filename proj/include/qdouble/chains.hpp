#pragma once

/**
 * @file chains.hpp
 * @brief Two-site Hamiltonians from regular spectral solutions, periodic chains, and the
 * checks run on them.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>

#include "qdouble/baxter.hpp"
#include "qdouble/doubles.hpp"
#include "qdouble/reps.hpp"

namespace qdouble {

struct TwoSiteHamiltonian {
  int site_dim = 0;
  Matrix matrix;
  std::string scaling_note;
};

struct ChainHamiltonian {
  int sites = 0;
  int site_dim = 0;
  Matrix matrix;
  bool periodic = true;
};

inline double hermiticity_residual(const Matrix& m) { return max_abs(m - m.adjoint()); }

/// d/dx [prefactor(x) Rc(x)] at x = 1, minus `subtract` times the identity.
inline TwoSiteHamiltonian two_site_h(const SpectralRMatrix& rx, const Laurent1& prefactor, Scalar subtract = 0.0,
                                     const Tolerances& tol = {}) {
  const auto [c, res] = regularity(rx);
  if (res > tol.entry_tol) throw NotRegular("two_site_h: Rc(1) is not a multiple of the identity");
  const LaurentMatrix scaled = rx.entries.map([&](const Laurent1& p) { return prefactor * p; });
  Matrix h = evaluate(scaled.map([](const Laurent1& p) { return laurent_derivative(p); }), 1.0);
  h -= subtract * identity(h.rows());
  std::string note = "d/dx of prefactor * Rc(x) at x = 1";
  if (subtract != Scalar{}) note += ", identity shift subtracted";
  if (std::abs(c) <= tol.entry_tol) note += "; Rc(1) = 0";
  return {rx.site_dim, std::move(h), std::move(note)};
}

/// A unimodular c with c h Hermitian, if one exists.
inline std::optional<Scalar> hermitian_phase(const Matrix& h, double tol = 1e-9) {
  if (hermiticity_residual(h) <= tol) return Scalar{1.0};
  Eigen::Index r = 0, c = 0;
  h.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(h(c, r)) <= tol) return std::nullopt;
  // c h Hermitian  <=>  h = (conj(c)/c) h^dagger.
  const Scalar ratio = h(r, c) / std::conj(h(c, r));
  const Scalar phase = std::polar(1.0, -std::arg(ratio) / 2.0);
  if (hermiticity_residual(phase * h) <= tol) return phase;
  return std::nullopt;
}

/// sum over the six permutations g of {1,2,3} of i (E^{g1}_{g2} (x) E^{g2}_{g3} - E^{g2}_{g3} (x) E^{g1}_{g2}).
inline TwoSiteHamiltonian permutation_form_h() {
  auto unit = [](int r, int c) {
    Matrix m = Matrix::Zero(3, 3);
    m(r, c) = 1.0;
    return m;
  };
  std::array<int, 3> g{0, 1, 2};
  Matrix h = Matrix::Zero(9, 9);
  do {
    const Matrix a = unit(g[0], g[1]), b = unit(g[1], g[2]);
    h += kI * (tensor(a, b) - tensor(b, a));
  } while (std::next_permutation(g.begin(), g.end()));
  return {3, std::move(h), "permutation form"};
}

inline long checked_chain_dim(int d, int sites) {
  if (sites < 2 || sites > 6) throw std::invalid_argument("chain length must be in [2, 6]");
  const long dim = ipow(d, sites);
  if (dim > 1024) throw TooLarge("chain dimension " + std::to_string(dim) + " exceeds 1024");
  return dim;
}

/// sum_j h_{j,j+1}, plus h_{L,1} when periodic.
inline ChainHamiltonian chain_h(const TwoSiteHamiltonian& h, int sites, bool periodic = true) {
  const int d = h.site_dim;
  const long dim = checked_chain_dim(d, sites);
  ChainHamiltonian out{sites, d, Matrix::Zero(dim, dim), periodic};
  for (int j = 0; j + 1 < sites; ++j) out.matrix += embed_pair(h.matrix, d, sites, j, j + 1);
  if (periodic) out.matrix += embed_pair(h.matrix, d, sites, sites - 1, 0);
  return out;
}

/// Open chain closed by G h_{L-1,L} G^-1 with G = Rb_{12} ... Rb_{L-1,L} (constant braid).
/// Unlike the plain h_{L,1} this keeps the full D(G) symmetry whenever Rb and h do.
inline ChainHamiltonian braided_chain_h(const TwoSiteHamiltonian& h, const Matrix& braid, int sites) {
  const int d = h.site_dim;
  if (braid.rows() != d * d || braid.cols() != d * d) throw std::invalid_argument("braided_chain_h: braid size mismatch");
  ChainHamiltonian out = chain_h(h, sites, false);
  Matrix g = identity(out.matrix.rows());
  for (int j = 0; j + 1 < sites; ++j) g = g * embed_pair(braid, d, sites, j, j + 1);
  out.matrix += g * embed_pair(h.matrix, d, sites, sites - 2, sites - 1) * g.inverse();
  out.periodic = true;
  return out;
}

/// (pi (x) ... (x) pi) of the (L-1)-fold coproduct of a.
inline Matrix global_action(const DoubleIrrep& rep, const DoubleElement& a, int sites) {
  return represent(rep, iterated_coproduct(a, sites));
}

/// Same as global_action on a basis element g h*, built directly: pi(g)^{(x)L} times the
/// projector onto site labels (h_1, ..., h_L) with h_L ... h_1 = h. Requires pi(k*) diagonal.
inline Matrix global_action(const DoubleIrrep& rep, Element g, Element h, int sites) {
  const FiniteGroup& grp = *rep.group;
  std::vector<std::optional<Element>> label(rep.dim);
  for (Element k : grp.elements())
    for (int i = 0; i < rep.dim; ++i)
      if (std::abs(rep.dual(k)(i, i) - 1.0) <= 1e-12) label[i] = k;
  if (std::any_of(label.begin(), label.end(), [](const auto& l) { return !l; })) {
    throw std::invalid_argument("global_action: dual elements must act diagonally");
  }
  const long dim = ipow(rep.dim, sites);
  Eigen::VectorXcd proj = Eigen::VectorXcd::Zero(dim);
  for (long idx = 0; idx < dim; ++idx) {
    Element prod = grp.identity();
    long rest = idx;
    for (int s = 0; s < sites; ++s, rest /= rep.dim) prod = grp.mul(*label[rest % rep.dim], prod);
    if (prod == h) proj(idx) = 1.0;
  }
  return tensor(std::vector<Matrix>(sites, rep(g))) * proj.asDiagonal();
}

/// max over the D(G) basis of |[H, global action]|; also returns the worst basis element.
inline std::pair<double, std::string> global_commutation(const ChainHamiltonian& h, const DoubleIrrep& rep) {
  if (rep.dim != h.site_dim) throw std::invalid_argument("global_commutation: irrep dimension mismatch");
  double worst = 0.0;
  std::string where;
  for (Element g : rep.group->elements())
    for (Element k : rep.group->elements()) {
      const double r = commutator_residual(h.matrix, global_action(rep, g, k, h.sites));
      if (r > worst) {
        worst = r;
        where = rep.group->label(g) + " " + rep.group->label(k) + "*";
      }
    }
  return {worst, where};
}

/// The same check restricted to group elements g = sum_h g h*.
inline double group_commutation(const ChainHamiltonian& h, const DoubleIrrep& rep) {
  double worst = 0.0;
  for (Element g : rep.group->elements())
    worst = std::max(worst, commutator_residual(h.matrix, tensor(std::vector<Matrix>(h.sites, rep(g)))));
  return worst;
}

/// t(x) = tr_0 R_{0L}(x) ... R_{01}(x) on an auxiliary site 0 plus `sites` chain sites.
inline Matrix transfer_matrix(const SpectralRMatrix& rx, Scalar x, int sites) {
  const int d = rx.site_dim;
  checked_chain_dim(d, sites + 1);
  const Matrix r = swap_matrix(d) * evaluate(rx.entries, x);
  Matrix t = identity(ipow(d, sites + 1));
  for (int j = sites; j >= 1; --j) t = t * embed_pair(r, d, sites + 1, 0, j);
  return partial_trace_first(t, d, sites + 1);
}

/// max |[t(x_k), t(x_l)]| over `points` random spectral values with |x| in [0.5, 1.5].
inline double transfer_commutation(const SpectralRMatrix& rx, int sites, int points, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> mod(0.5, 1.5), arg(0.0, 2.0 * std::numbers::pi);
  std::vector<Matrix> ts;
  for (int k = 0; k < points; ++k) ts.push_back(transfer_matrix(rx, std::polar(mod(rng), arg(rng)), sites));
  double worst = 0.0;
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = a + 1; b < ts.size(); ++b) worst = std::max(worst, commutator_residual(ts[a], ts[b]));
  return worst;
}

struct Spin1Fit {
  Matrix expression;  // unscaled spin-1 expression for -i h
  Scalar scale{};
  double residual = 0.0;  // max |-i h - scale * expression| / max |h|
  bool sparsity_matches = false;
};

/// Spin-1 operators on |+1>, |0>, |-1> with sigma_{x,y} = xy_scale S_{x,y} and
/// sigma_z = z_scale S_z; sigma_+ = (sigma_x + i sigma_y) / 2.
struct Spin1Ops {
  Matrix plus, minus, z;
};

inline Spin1Ops spin1_ops(double xy_scale = 1.0, double z_scale = 1.0) {
  Spin1Ops s{Matrix::Zero(3, 3), Matrix::Zero(3, 3), Matrix::Zero(3, 3)};
  s.plus(0, 1) = s.plus(1, 2) = xy_scale * std::sqrt(2.0) / 2.0;
  s.minus = s.plus.adjoint();
  s.z(0, 0) = z_scale;
  s.z(2, 2) = -z_scale;
  return s;
}

inline Matrix spin1_expression(const Spin1Ops& s) {
  const Matrix& p = s.plus;
  const Matrix& m = s.minus;
  const Matrix& z = s.z;
  const Matrix zm = z * m + m * z, zp = z * p + p * z;
  return -tensor(p * p, zm) + tensor(zm, p * p) + tensor(m * m, zp) - tensor(zp, m * m) + tensor(p * z, z * p) -
         tensor(z * p, p * z) + tensor(m * z, z * m) - tensor(z * m, m * z);
}

/// Least-squares scale fitting the spin-1 expression to -i h.
inline Spin1Fit spin1_form_residual(const Matrix& h, double xy_scale = 1.0, double z_scale = 1.0, double tol = 1e-9) {
  Spin1Fit fit;
  fit.expression = spin1_expression(spin1_ops(xy_scale, z_scale));
  const Matrix target = -kI * h;
  const Scalar denom = (fit.expression.adjoint() * fit.expression).trace();
  fit.scale = (fit.expression.adjoint() * target).trace() / denom;
  fit.residual = max_abs(target - fit.scale * fit.expression) / max_abs(target);
  fit.sparsity_matches = true;
  for (Eigen::Index i = 0; i < h.size(); ++i)
    if ((std::abs(h.data()[i]) > tol) != (std::abs(fit.expression.data()[i]) > tol)) fit.sparsity_matches = false;
  return fit;
}

}  // namespace qdouble
