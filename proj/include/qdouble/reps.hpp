#pragma once

/**
 * @file reps.hpp
 * @brief Base irreps of centralizers and the induced irreducible D(G)-modules.
 *
 * For a class C_k with representative g_k, centralizer Z_k and transversal alpha_s,
 * the module V = span{ v(s) (x) w : s in C_k, w in W } carries
 *
 *     pi(g)   : block (t, s) = rho(alpha_t^-1 g alpha_s),  t = g s g^-1
 *     pi(h*)  : identity on the v(h) block, zero elsewhere
 *
 * where rho is an irrep of Z_k on W. Basis order is (class element, base index) with
 * class elements in the order fixed by groups.hpp.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qdouble/doubles.hpp"
#include "qdouble/groups.hpp"
#include "qdouble/linalg.hpp"

namespace qdouble {

struct BaseIrrep {
  std::vector<Element> subgroup;
  int dim = 1;
  std::string label;
  std::map<Element, Matrix> matrices;

  const Matrix& operator()(Element z) const {
    auto it = matrices.find(z);
    if (it == matrices.end()) throw std::invalid_argument("base irrep " + label + " not defined on element");
    return it->second;
  }
};

struct DoubleIrrep {
  GroupPtr group;
  std::size_t class_index = 0;
  std::string class_label;
  std::string base_label;
  int dim = 0;
  std::vector<Matrix> pi;       // indexed by element
  std::vector<Matrix> pi_dual;  // projector for g*
  std::vector<std::pair<Element, int>> basis_order;

  std::string id() const { return group->name() + "/" + class_label + "/" + base_label; }
  const Matrix& operator()(Element g) const { return pi.at(g.index); }
  const Matrix& dual(Element h) const { return pi_dual.at(h.index); }
};

// ---- base irreps ------------------------------------------------------------

namespace detail {

inline Matrix scalar_matrix(Scalar s) { return Matrix::Constant(1, 1, s); }

/// pi(s^i t^j) = diag(w^ki, w^-ki) X^j, the two-dimensional dihedral irreps.
inline Matrix dihedral_two_dim(int n, int k, int i, int j) {
  Matrix m = Matrix::Zero(2, 2);
  const Scalar a = root_of_unity(n, k * i), b = root_of_unity(n, -k * i);
  if (j == 0) {
    m(0, 0) = a;
    m(1, 1) = b;
  } else {
    m(0, 1) = a;
    m(1, 0) = b;
  }
  return m;
}

/// Every homomorphism Z -> C^x sending gens[i] to exp(2 pi i e_i / m), m the exponent of Z.
/// Returns the exponent tuples together with the element values.
struct Character {
  std::vector<int> exps;
  std::map<Element, Scalar> values;
};

inline int subgroup_exponent(const FiniteGroup& g, const std::vector<Element>& z) {
  int m = 1;
  for (Element x : z) m = std::lcm(m, g.element_order(x));
  return m;
}

inline std::vector<Character> one_dim_characters(const FiniteGroup& g, const std::vector<Element>& z,
                                                 const std::vector<Element>& gens) {
  const int m = subgroup_exponent(g, z);
  std::vector<Character> out;
  std::vector<int> exps(gens.size(), 0);
  while (true) {
    std::map<Element, int> val{{g.identity(), 0}};
    std::vector<Element> frontier{g.identity()};
    bool ok = true;
    while (!frontier.empty() && ok) {
      const Element x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Element y = g.mul(x, gens[i]);
        const int v = static_cast<int>(floor_mod(val[x] + exps[i], m));
        auto it = val.find(y);
        if (it == val.end()) {
          val[y] = v;
          frontier.push_back(y);
        } else if (it->second != v) {
          ok = false;
        }
      }
    }
    if (ok && val.size() == z.size()) {
      Character c{exps, {}};
      for (const auto& [x, v] : val) c.values[x] = root_of_unity(m, v);
      out.push_back(std::move(c));
    }
    std::size_t pos = 0;
    while (pos < exps.size() && ++exps[pos] == m) exps[pos++] = 0;
    if (pos == exps.size()) break;
  }
  return out;
}

/// Greedy generating set, trying `preferred` first.
inline std::vector<Element> generating_set(const FiniteGroup& g, const std::vector<Element>& z,
                                           std::vector<Element> preferred) {
  preferred.insert(preferred.end(), z.begin(), z.end());
  std::vector<Element> gens;
  std::set<Element> span{g.identity()};
  for (Element c : preferred) {
    if (std::find(z.begin(), z.end(), c) == z.end() || span.count(c)) continue;
    gens.push_back(c);
    std::vector<Element> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      const Element x = frontier.back();
      frontier.pop_back();
      for (Element s : gens) {
        const Element y = g.mul(x, s);
        if (span.insert(y).second) frontier.push_back(y);
      }
    }
    if (span.size() == z.size()) break;
  }
  return gens;
}

inline BaseIrrep from_character(const std::vector<Element>& z, const Character& c, std::string label) {
  BaseIrrep b{z, 1, std::move(label), {}};
  for (Element x : z) b.matrices[x] = scalar_matrix(c.values.at(x));
  return b;
}

inline bool is_abelian(const FiniteGroup& g, const std::vector<Element>& z) {
  for (Element a : z)
    for (Element b : z)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

/// Orthonormal (Helmert) basis of the sum-zero subspace of C^n, as columns.
inline Matrix sum_zero_basis(int n) {
  Matrix q = Matrix::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double norm = std::sqrt(static_cast<double>(k * (k + 1)));
    for (int i = 0; i < k; ++i) q(i, k - 1) = 1.0 / norm;
    q(k, k - 1) = -static_cast<double>(k) / norm;
  }
  return q;
}

inline Matrix permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Matrix p = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) p(perm[x], x) = 1.0;
  return p;
}

/// Action of an S_4 element on the three pairings {12|34}, {13|24}, {14|23}.
inline std::vector<int> pairing_action(const std::vector<int>& perm) {
  auto pairing_of = [](int a, int b) {
    // Pairing index = partner of point 0 minus one.
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    std::vector<int> rest;
    for (int x = 1; x < 4; ++x)
      if (x != a && x != b) rest.push_back(x);
    return rest.front() - 1;
  };
  std::vector<int> out(3);
  for (int p = 0; p < 3; ++p) out[p] = pairing_of(perm[0], perm[p + 1]);
  return out;
}

inline std::string sign_label(const std::vector<int>& exps, int m) {
  // exps are exponents of exp(2 pi i / m) on two order-two generators.
  return "a" + std::to_string(exps[0] * 2 / m) + "b" + std::to_string(exps[1] * 2 / m);
}

}  // namespace detail

/// The irreps of D_n: pi_+/- and pi_k (odd n), the four sign irreps and pi_k (even n).
inline std::vector<BaseIrrep> dihedral_base_irreps(const FiniteGroup& g) {
  if (g.kind() != GroupKind::Dihedral) throw std::invalid_argument("dihedral_base_irreps: not a dihedral group");
  const int n = g.parameter();
  const auto elems = g.elements();
  std::vector<BaseIrrep> out;
  auto one_dim = [&](Scalar s_val, Scalar t_val, std::string label) {
    BaseIrrep b{elems, 1, std::move(label), {}};
    for (Element x : elems) {
      const auto [i, j] = g.dihedral_form(x);
      b.matrices[x] = detail::scalar_matrix(std::pow(s_val, i) * std::pow(t_val, j));
    }
    out.push_back(std::move(b));
  };
  if (n % 2 == 1) {
    one_dim(1.0, 1.0, "p");
    one_dim(1.0, -1.0, "m");
  } else {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        one_dim(sign_power(a), sign_power(b), "a" + std::to_string(a) + "b" + std::to_string(b));
  }
  const int kmax = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
  for (int k = 1; k <= kmax; ++k) {
    BaseIrrep b{elems, 2, "k" + std::to_string(k), {}};
    for (Element x : elems) {
      const auto [i, j] = g.dihedral_form(x);
      b.matrices[x] = detail::dihedral_two_dim(n, k, i, j);
    }
    out.push_back(std::move(b));
  }
  return out;
}

/// Irreps of the centralizer Z_k of a class representative.
///
/// Supported: any abelian centralizer (all characters), the whole group for D_n, A_4
/// and S_4, and the D_4 centralizer of (12)(34) in S_4. Anything else is rejected.
inline std::vector<BaseIrrep> centralizer_irreps(const FiniteGroup& g, const ConjugacyClass& cls) {
  const std::vector<Element>& z = cls.centralizer;
  if (z.empty()) throw std::invalid_argument("centralizer_irreps: class data has no centralizer");
  const bool whole = static_cast<int>(z.size()) == g.order();

  if (g.kind() == GroupKind::Dihedral) {
    const int n = g.parameter();
    if (whole) return dihedral_base_irreps(g);
    const auto [ri, rj] = g.dihedral_form(cls.rep);
    if (rj == 0) {
      // Z = <s>: s -> w^j.
      std::vector<BaseIrrep> out;
      for (int j = 0; j < n; ++j) {
        BaseIrrep b{z, 1, "j" + std::to_string(j), {}};
        for (Element x : z) b.matrices[x] = detail::scalar_matrix(root_of_unity(n, j * g.dihedral_form(x).first));
        out.push_back(std::move(b));
      }
      return out;
    }
    if (n % 2 == 1) {
      // Z = {e, rep}: rep -> +-1.
      std::vector<BaseIrrep> out;
      for (int sgn = 0; sgn < 2; ++sgn) {
        BaseIrrep b{z, 1, sgn == 0 ? "p" : "m", {}};
        for (Element x : z) b.matrices[x] = detail::scalar_matrix(x == g.identity() ? 1.0 : sign_power(sgn));
        out.push_back(std::move(b));
      }
      return out;
    }
    // Z = {e, rep, s^(n/2), s^(n/2) rep}: s^(n/2) -> (-1)^a, rep -> (-1)^b.
    const Element half = g.dihedral(n / 2, 0);
    std::vector<BaseIrrep> out;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        BaseIrrep base{z, 1, "a" + std::to_string(a) + "b" + std::to_string(b), {}};
        for (Element x : z) {
          Scalar v = 1.0;
          if (x == half || x == g.mul(half, cls.rep)) v *= sign_power(a);
          if (x == cls.rep || x == g.mul(half, cls.rep)) v *= sign_power(b);
          base.matrices[x] = detail::scalar_matrix(v);
        }
        out.push_back(std::move(base));
      }
    return out;
  }

  const bool a4 = g.kind() == GroupKind::Alternating;
  const bool s4 = g.kind() == GroupKind::Symmetric && g.parameter() == 4;

  if (whole && (a4 || s4)) {
    std::vector<BaseIrrep> out;
    const std::vector<Element> gens =
        a4 ? std::vector<Element>{g.find("(123)"), g.find("(12)(34)")} : std::vector<Element>{g.find("(12)"), g.find("(1234)")};
    for (const auto& c : detail::one_dim_characters(g, z, gens)) {
      std::string label;
      if (a4) {
        const Scalar v = c.values.at(g.find("(123)"));
        label = std::abs(v - 1.0) < 1e-9 ? "1" : (std::abs(v - root_of_unity(3, 1)) < 1e-9 ? "w" : "w2");
      } else {
        label = std::abs(c.values.at(g.find("(12)")) - 1.0) < 1e-9 ? "triv" : "sign";
      }
      out.push_back(detail::from_character(z, c, label));
    }
    const Matrix q4 = detail::sum_zero_basis(4);
    BaseIrrep std3{z, 3, "std3", {}};
    for (Element x : z) std3.matrices[x] = q4.adjoint() * detail::permutation_matrix(g.permutation(x)) * q4;
    if (s4) {
      const Matrix q3 = detail::sum_zero_basis(3);
      BaseIrrep std2{z, 2, "std2", {}};
      BaseIrrep std3s{z, 3, "std3s", {}};
      for (Element x : z) {
        std2.matrices[x] = q3.adjoint() * detail::permutation_matrix(detail::pairing_action(g.permutation(x))) * q3;
        std3s.matrices[x] = (is_even_permutation(g.permutation(x)) ? 1.0 : -1.0) * std3.matrices[x];
      }
      out.push_back(std::move(std2));
      out.push_back(std::move(std3));
      out.push_back(std::move(std3s));
    } else {
      out.push_back(std::move(std3));
    }
    return out;
  }

  if (s4 && g.label(cls.rep) == "(12)(34)") {
    // Z ~ D_4 with s = (1324), t = (12): (12) -> (-1)^a, (1324) -> (-1)^b, plus the
    // two-dimensional irrep s -> diag(i, -i), t -> X.
    const Element t = g.find("(12)"), s = g.find("(1324)");
    std::vector<BaseIrrep> out;
    for (const auto& c : detail::one_dim_characters(g, z, {t, s})) {
      const int a = std::abs(c.values.at(t) - 1.0) < 1e-9 ? 0 : 1;
      const int b = std::abs(c.values.at(s) - 1.0) < 1e-9 ? 0 : 1;
      out.push_back(detail::from_character(z, c, "a" + std::to_string(a) + "b" + std::to_string(b)));
    }
    std::sort(out.begin(), out.end(), [](const BaseIrrep& x, const BaseIrrep& y) { return x.label < y.label; });
    BaseIrrep two{z, 2, "k1", {}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) two.matrices[g.mul(g.power(s, i), g.power(t, j))] = detail::dihedral_two_dim(4, 1, i, j);
    out.push_back(std::move(two));
    return out;
  }

  if (detail::is_abelian(g, z)) {
    // The group's own generators first, then the representative.
    std::vector<Element> preferred = g.generators();
    preferred.push_back(cls.rep);
    const auto gens = detail::generating_set(g, z, preferred);
    const int m = detail::subgroup_exponent(g, z);
    std::vector<BaseIrrep> out;
    for (const auto& c : detail::one_dim_characters(g, z, gens)) {
      std::string label;
      if (gens.size() == 1) {
        label = "j" + std::to_string(c.exps[0]);
      } else if (gens.size() == 2 && m == 2) {
        label = detail::sign_label(c.exps, m);
      } else {
        label = "c";
        for (std::size_t i = 0; i < c.exps.size(); ++i) label += (i ? "_" : "") + std::to_string(c.exps[i]);
      }
      out.push_back(detail::from_character(z, c, label));
    }
    return out;
  }
  throw UnsupportedCentralizer("no irreps available for the centralizer of " + g.label(cls.rep) + " in " + g.name());
}

// ---- induction ----------------------------------------------------------------

inline DoubleIrrep induce(const GroupPtr& group, const ConjugacyData& data, std::size_t class_index, const BaseIrrep& base) {
  const FiniteGroup& g = *group;
  const ConjugacyClass& cls = data.classes.at(class_index);
  if (std::set<Element>(base.subgroup.begin(), base.subgroup.end()) !=
      std::set<Element>(cls.centralizer.begin(), cls.centralizer.end())) {
    throw std::invalid_argument("induce: base irrep " + base.label + " is not defined on Z(" + cls.label + ")");
  }
  DoubleIrrep rep;
  rep.group = group;
  rep.class_index = class_index;
  rep.class_label = cls.label;
  rep.base_label = base.label;
  const int m = base.dim;
  const int blocks = static_cast<int>(cls.elements.size());
  rep.dim = blocks * m;
  for (Element s : cls.elements)
    for (int w = 0; w < m; ++w) rep.basis_order.emplace_back(s, w);

  rep.pi.assign(g.order(), Matrix::Zero(rep.dim, rep.dim));
  rep.pi_dual.assign(g.order(), Matrix::Zero(rep.dim, rep.dim));
  for (Element x : g.elements()) {
    Matrix& px = rep.pi[x.index];
    for (int sp = 0; sp < blocks; ++sp) {
      const Element s = cls.elements[sp];
      const Element t = g.conj(x, s);
      const Element z = g.mul(g.mul(g.inv(cls.transversal.at(t)), x), cls.transversal.at(s));
      px.block(static_cast<Eigen::Index>(cls.position(t)) * m, static_cast<Eigen::Index>(sp) * m, m, m) = base(z);
    }
    if (cls.contains(x)) {
      const auto p = static_cast<Eigen::Index>(cls.position(x));
      rep.pi_dual[x.index].block(p * m, p * m, m, m) = Matrix::Identity(m, m);
    }
  }
  return rep;
}

/// Every induced irrep over every class whose centralizer is supported.
inline std::vector<DoubleIrrep> all_double_irreps(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const bool supported = g.kind() == GroupKind::Dihedral || g.kind() == GroupKind::Cyclic ||
                         g.kind() == GroupKind::Alternating || (g.kind() == GroupKind::Symmetric && g.parameter() == 4);
  if (!supported) throw UnsupportedGroup("all_double_irreps: unsupported group " + g.name());
  const ConjugacyData data = conjugacy_data(g);
  std::vector<DoubleIrrep> out;
  for (std::size_t k = 0; k < data.classes.size(); ++k)
    for (const auto& base : centralizer_irreps(g, data.classes[k])) out.push_back(induce(group, data, k, base));
  return out;
}

struct IrrepId {
  std::string group;
  std::string class_label;
  std::string base_label;
};

inline IrrepId parse_irrep_id(const std::string& id) {
  const auto a = id.find('/');
  const auto b = id.rfind('/');
  if (a == std::string::npos || a == b) throw std::invalid_argument("bad irrep id '" + id + "'");
  return {id.substr(0, a), id.substr(a + 1, b - a - 1), id.substr(b + 1)};
}

inline DoubleIrrep find_irrep(const std::string& id) {
  const IrrepId parts = parse_irrep_id(id);
  const GroupPtr g = parse_group_spec(parts.group);
  const ConjugacyData data = conjugacy_data(*g);
  for (std::size_t k = 0; k < data.classes.size(); ++k) {
    if (data.classes[k].label != parts.class_label) continue;
    for (const auto& base : centralizer_irreps(*g, data.classes[k]))
      if (base.label == parts.base_label) return induce(g, data, k, base);
  }
  throw std::invalid_argument("unknown irrep '" + id + "'");
}

// ---- images of algebra elements --------------------------------------------------

/// pi(a) for a = sum c g h*, read as pi(g) pi(h*).
inline Matrix represent(const DoubleIrrep& rep, const DoubleElement& a) {
  Matrix m = Matrix::Zero(rep.dim, rep.dim);
  for (const auto& [p, c] : a.terms()) m += c * rep(p.g) * rep.dual(p.h);
  return m;
}

/// (pi (x) ... (x) pi)(t), first leg on the fastest index.
inline Matrix represent(const DoubleIrrep& rep, const DoubleTensor& t) {
  const long dim = ipow(rep.dim, t.rank());
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& term : t.terms()) {
    std::vector<Matrix> legs;
    for (const auto& l : term.legs) legs.push_back(represent(rep, l));
    m += term.coeff * tensor(legs);
  }
  return m;
}

/// Block-diagonal sum of two modules; reducible by construction.
inline DoubleIrrep direct_sum(const DoubleIrrep& a, const DoubleIrrep& b) {
  DoubleIrrep out;
  out.group = a.group;
  out.class_index = a.class_index;
  out.class_label = a.class_label + "+" + b.class_label;
  out.base_label = a.base_label + "+" + b.base_label;
  out.dim = a.dim + b.dim;
  auto blockdiag = [&](const Matrix& x, const Matrix& y) {
    Matrix m = Matrix::Zero(out.dim, out.dim);
    m.topLeftCorner(a.dim, a.dim) = x;
    m.bottomRightCorner(b.dim, b.dim) = y;
    return m;
  };
  for (std::size_t i = 0; i < a.pi.size(); ++i) {
    out.pi.push_back(blockdiag(a.pi[i], b.pi[i]));
    out.pi_dual.push_back(blockdiag(a.pi_dual[i], b.pi_dual[i]));
  }
  out.basis_order = a.basis_order;
  out.basis_order.insert(out.basis_order.end(), b.basis_order.begin(), b.basis_order.end());
  return out;
}

// ---- verification ------------------------------------------------------------------

/// Dimension of { X : X A = A X for every pi(g), pi(h*) }.
inline int commutant_dimension(const DoubleIrrep& rep, double tol = 1e-9) {
  const int d = rep.dim;
  const Matrix id = identity(d);
  Matrix gram = Matrix::Zero(d * d, d * d);
  auto accumulate = [&](const Matrix& a) {
    // Column-major vec: vec(AX - XA) = (I kron A - A^T kron I) vec X.
    const Matrix k = tensor(a, id) - tensor(id, a.transpose());
    gram += k.adjoint() * k;
  };
  for (const auto& m : rep.pi) accumulate(m);
  for (const auto& m : rep.pi_dual) accumulate(m);
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  int nullity = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) <= tol * scale) ++nullity;
  return nullity;
}

struct IrrepCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct IrrepReport {
  std::string id;
  std::vector<IrrepCheck> checks;
  int commutant_dim = 0;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const IrrepCheck& c) { return c.pass; });
  }
};

inline IrrepReport verify_irrep(const DoubleIrrep& rep, const Tolerances& tol = {}) {
  const FiniteGroup& g = *rep.group;
  IrrepReport r;
  r.id = rep.id();
  const Matrix id = identity(rep.dim);
  double mult = 0.0, duals = 0.0, compat = 0.0;
  Matrix sum = Matrix::Zero(rep.dim, rep.dim);
  for (Element a : g.elements()) {
    sum += rep.dual(a);
    for (Element b : g.elements()) {
      mult = std::max(mult, max_abs(rep(a) * rep(b) - rep(g.mul(a, b))));
      duals = std::max(duals, max_abs(rep.dual(a) * rep.dual(b) - (a == b ? rep.dual(b) : Matrix::Zero(rep.dim, rep.dim))));
      // h* g = g (g^-1 h g)*
      compat = std::max(compat, max_abs(rep.dual(b) * rep(a) - rep(a) * rep.dual(g.mul(g.mul(g.inv(a), b), a))));
    }
  }
  auto add = [&](std::string name, double res) { r.checks.push_back({std::move(name), res, res <= tol.entry_tol}); };
  add("multiplicative", mult);
  add("unit", max_abs(rep(g.identity()) - id));
  add("dual-idempotents", duals);
  add("dual-resolution", max_abs(sum - id));
  add("compatibility", compat);
  r.commutant_dim = commutant_dimension(rep);
  r.checks.push_back({"commutant-dimension", static_cast<double>(r.commutant_dim), r.commutant_dim == 1});
  return r;
}

/// tr(pi(g) pi(h*)) over all pairs (g, h), in index order.
inline std::vector<Scalar> character(const DoubleIrrep& rep) {
  std::vector<Scalar> chi;
  for (Element a : rep.group->elements())
    for (Element b : rep.group->elements()) chi.push_back((rep(a) * rep.dual(b)).trace());
  return chi;
}

inline bool characters_differ(const DoubleIrrep& a, const DoubleIrrep& b, double tol = 1e-9) {
  const auto ca = character(a), cb = character(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (std::abs(ca[i] - cb[i]) > tol) return true;
  return false;
}

}  // namespace qdouble
