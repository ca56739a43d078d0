// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any is red.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "qdouble/chains.hpp"
#include "qdouble/io.hpp"

using namespace qdouble;

namespace {

constexpr double kTol = 1e-9;

// Collects pass/fail for one criterion plus the worst residual seen and free-form notes.
struct Gate {
  bool ok = true;
  double worst = 0.0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 4) failures.push_back(what);
    }
  }
  // residual <= tol
  void le(double residual, double tol, const std::string& what) {
    if (std::isfinite(residual)) worst = std::max(worst, residual);
    expect(residual <= tol, what + " residual=" + format_sig12(residual));
  }
  // residual > tol (negative controls)
  void gt(double residual, double tol, const std::string& what) {
    expect(residual > tol, what + " residual=" + format_sig12(residual) + " not > " + format_sig12(tol));
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::vector<GroupPtr> supported_groups() {
  std::vector<GroupPtr> gs;
  for (int n = 3; n <= 8; ++n) gs.push_back(dihedral(n));
  gs.push_back(alternating4());
  gs.push_back(symmetric(4));
  return gs;
}

Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Matrix sparse(int n, std::initializer_list<std::tuple<int, int, Scalar>> entries) {
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [r, c, v] : entries) m(r, c) = v;
  return m;
}

Matrix diag(std::vector<Scalar> v) {
  Matrix m = Matrix::Zero(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

std::string ab(int a, int b) { return "a" + std::to_string(a) + "b" + std::to_string(b); }
std::string dn(int n) { return "dihedral:" + std::to_string(n); }

// Valid (n, j) pairs for the two-dimensional rotation irreps with three distinct braid eigenvalues.
std::vector<std::pair<int, int>> six_vertex_params() {
  std::vector<std::pair<int, int>> out;
  for (int n = 3; n <= 8; ++n)
    for (int j = 1; j < n; ++j)
      if ((4 * j) % n != 0) out.emplace_back(n, j);
  return out;
}

Matrix d6_braid() { return build_r(find_irrep("dihedral:6/s2t/a0b0")).braid; }

// ---- 1 ----------------------------------------------------------------------------------

Gate census() {
  Gate g;
  for (int n = 3; n <= 8; ++n) {
    std::map<int, int> by_dim;
    int sum = 0;
    for (const auto& r : all_double_irreps(dihedral(n))) {
      ++by_dim[r.dim];
      sum += r.dim * r.dim;
    }
    const std::string tag = dn(n);
    g.expect(sum == 4 * n * n, tag + " sum dim^2 = " + std::to_string(sum));
    std::map<int, int> expected;
    if (n % 2) {
      expected[1] = 2;
      expected[n] += 2;
      expected[2] += (n * n - 1) / 2;
    } else {
      expected[1] = 8;
      expected[n / 2] += 8;
      expected[2] += (n + 2) * (n / 2 - 1);
    }
    g.expect(by_dim == expected, tag + " dimension counts");
  }
  g.note("D3..D8, sum dim^2 = 4n^2");
  return g;
}

// ---- 2 ----------------------------------------------------------------------------------

Gate reference_matrices() {
  Gate g;
  // Odd dihedral example: reflection class of D3.
  {
    auto d3 = dihedral(3);
    const Matrix sigma = mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    const Matrix tau = mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    const auto p = find_irrep("dihedral:3/st/p"), m = find_irrep("dihedral:3/st/m");
    g.le(max_abs(p(d3->dihedral(1, 0)) - sigma), kTol, "D3 st/p sigma");
    g.le(max_abs(p(d3->dihedral(0, 1)) - tau), kTol, "D3 st/p tau");
    g.le(max_abs(m(d3->dihedral(1, 0)) - sigma), kTol, "D3 st/m sigma");
    g.le(max_abs(m(d3->dihedral(0, 1)) + tau), kTol, "D3 st/m tau");
    for (int i = 0; i < 3; ++i) {
      Matrix e = Matrix::Zero(3, 3);
      e(i, i) = 1.0;
      g.le(max_abs(p.dual(d3->dihedral(i, 1)) - e), kTol, "D3 st/p dual");
    }
  }
  // Both three-dimensional reflection classes of D6.
  {
    auto d6 = dihedral(6);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const Scalar sa = sign_power(a), sb = sign_power(b), sab = sign_power(a + b);
        const Matrix sigma = mat({{0, 0, sa}, {1, 0, 0}, {0, 1, 0}});
        const auto even = find_irrep("dihedral:6/s2t/" + ab(a, b));
        const auto odd = find_irrep("dihedral:6/s2t1/" + ab(a, b));
        g.le(max_abs(even(d6->dihedral(1, 0)) - sigma), kTol, even.id() + " sigma");
        g.le(max_abs(even(d6->dihedral(0, 1)) - sb * mat({{1, 0, 0}, {0, 0, sa}, {0, sa, 0}})), kTol, even.id() + " tau");
        g.le(max_abs(odd(d6->dihedral(1, 0)) - sigma), kTol, odd.id() + " sigma");
        g.le(max_abs(odd(d6->dihedral(0, 1)) - sab * mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), kTol, odd.id() + " tau");
      }
  }
  // Two-dimensional braid form.
  for (int n = 3; n <= 8; ++n)
    for (int j = 0; j < n; ++j) {
      const Scalar w = root_of_unity(n, j), wi = root_of_unity(n, -j);
      const auto r = build_r(find_irrep(dn(n) + "/s1/j" + std::to_string(j)));
      g.le(max_abs(r.r - diag({w, wi, wi, w})), kTol, dn(n) + " 2-dim R");
      g.le(max_abs(r.braid - sparse(4, {{0, 0, w}, {1, 2, wi}, {2, 1, wi}, {3, 3, w}})), kTol, dn(n) + " 2-dim braid");
    }
  // Three-dimensional constant braid of D6.
  for (const std::string cls : {"s2t", "s2t1"})
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const Scalar sa = sign_power(a);
        const Matrix expect = sign_power(b) * sparse(9, {{0, 0, 1.0}, {1, 5, 1.0}, {2, 7, sa}, {3, 2, sa}, {4, 4, 1.0},
                                                         {5, 6, sa}, {6, 1, sa}, {7, 3, 1.0}, {8, 8, 1.0}});
        g.le(max_abs(build_r(find_irrep("dihedral:6/" + cls + "/" + ab(a, b))).braid - expect), kTol, cls + " braid");
      }
  // Six-vertex solution.
  for (const auto& [n, j] : six_vertex_params()) {
    const Scalar w2 = root_of_unity(n, 2 * j), wm2 = root_of_unity(n, -2 * j);
    LaurentMatrix expect(4, 4, Laurent1({"x"}));
    expect(0, 0) = expect(3, 3) = laurent1({{-1, w2}, {1, -wm2}});
    expect(1, 1) = expect(2, 2) = laurent1({{0, w2 - wm2}});
    expect(1, 2) = expect(2, 1) = laurent1({{-1, 1.0}, {1, -1.0}});
    g.le((six_vertex_solution(n, j).entries - expect).max_abs_coeff(), kTol, "six-vertex " + std::to_string(n));
  }
  // 21-vertex R = P Rb(x).
  {
    const Laurent1 d = laurent1({{2, 1.0}, {1, -1.0}, {0, 1.0}});
    const Laurent1 x = lx();
    const Laurent1 o = laurent1({{0, 1.0}, {1, -1.0}});
    const Laurent1 p = laurent1({{2, 1.0}, {1, -1.0}});
    LaurentMatrix r(9, 9, Laurent1({"x"}));
    r(0, 0) = r(4, 4) = r(8, 8) = d;
    r(1, 2) = o, r(1, 3) = x, r(1, 7) = p;
    r(2, 1) = o, r(2, 5) = p, r(2, 6) = x;
    r(3, 1) = x, r(3, 5) = o, r(3, 6) = p;
    r(5, 2) = p, r(5, 3) = o, r(5, 7) = x;
    r(6, 2) = x, r(6, 3) = p, r(6, 7) = o;
    r(7, 1) = p, r(7, 5) = x, r(7, 6) = o;
    g.le((r_form(twenty_one_vertex_solution()) - r).max_abs_coeff(), kTol, "21-vertex R");
  }
  // Two-site generator of the 21-vertex chain.
  {
    const Matrix h = kI * sparse(9, {{1, 5, -1.0}, {1, 6, 1.0}, {2, 3, 1.0}, {2, 7, -1.0}, {3, 2, -1.0}, {3, 7, 1.0},
                                     {5, 1, 1.0}, {5, 6, -1.0}, {6, 1, -1.0}, {6, 5, 1.0}, {7, 2, 1.0}, {7, 3, -1.0}});
    g.le(max_abs(two_site_h(twenty_one_vertex_solution(), lx(kI, -1)).matrix - h), kTol, "21-vertex h");
  }
  // A4 constant R and braid.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Scalar pa = sign_power(a), pb = sign_power(b), pab = sign_power(a + b);
      const auto r = build_r(find_irrep("alternating:4/(12)(34)/" + ab(a, b)));
      g.le(max_abs(r.r - diag({pa, pab, pb, pb, pa, pab, pab, pb, pa})), kTol, "A4 R " + ab(a, b));
      const Matrix braid = sparse(9, {{0, 0, pa}, {1, 3, pb}, {2, 6, pab}, {3, 1, pab}, {4, 4, pa}, {5, 7, pb},
                                      {6, 2, pb}, {7, 5, pab}, {8, 8, pa}});
      g.le(max_abs(r.braid - braid), kTol, "A4 braid " + ab(a, b));
    }
  // A4 rational twist with b0 = i, c = 1.
  {
    const auto twist = linear_twist(a4_normalized_braid(1), kI, 1.0);
    for (Scalar u : {Scalar{0.3}, Scalar{-1.7}, Scalar{0.4, 0.9}}) {
      const Scalar iu = kI * u;
      const Matrix expect = sparse(9, {{0, 0, 1.0 + u}, {1, 1, 1.0}, {1, 3, iu}, {2, 2, 1.0}, {2, 6, -iu}, {3, 1, -iu},
                                       {3, 3, 1.0}, {4, 4, 1.0 + u}, {5, 5, 1.0}, {5, 7, iu}, {6, 2, iu}, {6, 6, 1.0},
                                       {7, 5, -iu}, {7, 7, 1.0}, {8, 8, 1.0 + u}});
      g.le(max_abs(twist.evaluator(u) - expect), kTol, "A4 twist");
    }
  }
  // S4 diagonal R.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Scalar s = sign_power(a + b);
      g.le(max_abs(build_r(find_irrep("symmetric:4/(12)(34)/" + ab(a, b))).r - diag({1, s, s, s, 1, s, s, s, 1})), kTol,
           "S4 R " + ab(a, b));
    }
  return g;
}

// ---- 3 ----------------------------------------------------------------------------------

Gate constant_ybe() {
  Gate g;
  int count = 0;
  for (const auto& gp : supported_groups())
    for (const auto& rep : all_double_irreps(gp)) {
      g.le(check_constant_ybe(build_r(rep)), kTol, rep.id());
      ++count;
    }
  int qt = 0;
  for (const auto& gp : {dihedral(3), dihedral(6)})
    for (const auto& rep : all_double_irreps(gp)) {
      if (rep.dim > 3) continue;
      const auto q = check_quasi_triangularity(rep);
      g.le(std::max({q.qt1, q.qt2, q.qt3}), kTol, "qt " + rep.id());
      ++qt;
    }
  g.note(std::to_string(count) + " irreps, qt on " + std::to_string(qt));
  return g;
}

// ---- 4 ----------------------------------------------------------------------------------

Gate spectra() {
  Gate g;
  const auto check = [&](const Matrix& m, const std::vector<std::pair<Scalar, int>>& expected, const std::string& what) {
    const auto s = eigen_analysis(m, 1e-6);
    g.expect(s.values.size() == expected.size(), what + " cluster count " + std::to_string(s.values.size()));
    for (const auto& [v, mult] : expected)
      g.expect(s.multiplicity_of(v, 1e-6) == mult, what + " multiplicity of " + format_sig12(v));
  };
  const Scalar w = root_of_unity(3, 1);
  check(d6_braid(), {{1.0, 5}, {w, 2}, {w * w, 2}}, "D6 3-dim");
  for (int b = 0; b < 2; ++b) {
    check(build_r(find_irrep("alternating:4/(12)(34)/" + ab(0, b))).braid, {{1.0, 6}, {-1.0, 3}}, "A4 a=0");
    check(build_r(find_irrep("alternating:4/(12)(34)/" + ab(1, b))).braid, {{-1.0, 3}, {kI, 3}, {-kI, 3}}, "A4 a=1");
  }
  return g;
}

// ---- 5 ----------------------------------------------------------------------------------

Gate ansatz_selection() {
  Gate g;
  const auto cands = enumerate_candidates(d6_braid());
  g.expect(cands.size() == 3, "candidate count " + std::to_string(cands.size()));
  const Scalar w = root_of_unity(3, 1);
  const Laurent1 omx = laurent1({{0, 1.0}, {1, -1.0}});
  const Laurent1 xxm = laurent1({{2, 1.0}, {1, -1.0}});
  // (lambda_2, f, h) per row; g = 1 - x throughout.
  const std::vector<std::tuple<Scalar, Scalar, Scalar>> rows{{1.0, 1.0, 1.0}, {w, w, w * w}, {w * w, w * w, w}};
  for (std::size_t row = 0; row < rows.size(); ++row) {
    const auto& [l2, fc, hc] = rows[row];
    const auto it = std::find_if(cands.begin(), cands.end(),
                                 [&](const AnsatzCandidate& c) { return std::abs(c.lambda[1] - l2) < 1e-9; });
    if (it == cands.end()) {
      g.expect(false, "row " + std::to_string(row + 1) + " missing");
      continue;
    }
    LaurentMatrix expect = lx(fc) * LaurentMatrix::identity(9, Laurent1({"x"})) + omx * to_laurent(d6_braid()) +
                           (hc * xxm) * to_laurent(d6_braid().inverse());
    g.expect(proportional_laurent(it->matrix.entries, expect), "row " + std::to_string(row + 1) + " differs");
    const double res = check_braid_ybe_laurent(it->matrix);
    if (row == 0) {
      g.le(res, kTol, "row 1 braid YBE");
    } else {
      g.gt(res, 1e-3, "row " + std::to_string(row + 1) + " braid YBE");
      g.note("row " + std::to_string(row + 1) + " residual " + format_sig12(res));
    }
  }
  int zero_f = 0;
  for (const auto& [n, j] : six_vertex_params()) {
    const auto c = enumerate_candidates(build_r(find_irrep(dn(n) + "/s1/j" + std::to_string(j))).braid);
    for (const auto& cand : c) {
      const Scalar mw = root_of_unity(n, -j);
      if (std::abs(cand.lambda[1] - mw) < 1e-9 || std::abs(cand.lambda[1] + mw) < 1e-9) {
        g.expect(cand.coeffs.f.is_zero(), dn(n) + " j" + std::to_string(j) + " f not zero");
        ++zero_f;
      }
    }
  }
  g.expect(zero_f == 2 * static_cast<int>(six_vertex_params().size()), "f=0 orderings " + std::to_string(zero_f));
  g.note(std::to_string(zero_f) + " two-dim orderings with f = 0");
  return g;
}

// ---- 6 ----------------------------------------------------------------------------------

Gate unitarity_scalars() {
  Gate g;
  for (const auto& [n, j] : six_vertex_params()) {
    const auto u = unitarity(six_vertex_solution(n, j));
    const Laurent1 expected =
        laurent1({{0, root_of_unity(n, 4 * j) + root_of_unity(n, -4 * j)}, {2, -1.0}, {-2, -1.0}});
    g.le(u.residual, kTol, "six-vertex not scalar");
    g.le((u.scalar - expected).max_abs_coeff(), kTol, "six-vertex scalar " + std::to_string(n));
  }
  const auto u = unitarity(twenty_one_vertex_solution());
  const Laurent1 t = laurent1({{1, 1.0}, {0, -1.0}, {-1, 1.0}});
  g.le(u.residual, kTol, "21-vertex not scalar");
  g.le((u.scalar - t * t).max_abs_coeff(), kTol, "21-vertex scalar");
  return g;
}

// ---- 7 ----------------------------------------------------------------------------------

Gate a4_solutions_and_limits() {
  Gate g;
  std::map<std::string, int> families;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (const auto& s : a4_solutions(a, b)) {
        g.le(check_braid_ybe_numeric(s, 50, 20240607), kTol, s.family + " a" + std::to_string(a) + "b" + std::to_string(b));
        ++families[s.family];
      }
  for (const std::string f : {"hecke-linear", "exponential-diagonal", "linear-twist"})
    g.expect(families[f] > 0, f + " missing");
  for (const auto& s : a4_solutions(1, 1)) {
    const auto lim = additive_limit_against(s);
    g.gt(lim.proportionality, 0.5, s.family + " limit");
    g.note(s.family + " limit " + format_sig12(lim.proportionality));
  }
  double six = 0.0;
  for (const auto& [n, j] : six_vertex_params()) {
    const Matrix braid = build_r(find_irrep(dn(n) + "/s1/j" + std::to_string(j))).braid;
    const double p = laurent_limit_against(six_vertex_solution(n, j), braid).proportionality;
    g.le(p, kTol, "six-vertex x->0 " + std::to_string(n) + "," + std::to_string(j));
    six = std::max(six, p);
  }
  g.note("six-vertex x->0 " + format_sig12(six));
  return g;
}

// ---- 8 ----------------------------------------------------------------------------------

Gate hamiltonian() {
  Gate g;
  const auto h = two_site_h(twenty_one_vertex_solution(), lx(kI, -1));
  g.le(max_abs(h.matrix - permutation_form_h().matrix), 0.0, "h vs permutation form");
  g.le(hermiticity_residual(h.matrix), kTol, "h Hermitian");
  const auto rep = find_irrep("dihedral:6/s2t/a0b0");
  for (int L : {2, 3}) {
    const auto chain = chain_h(h, L);
    g.le(hermiticity_residual(chain.matrix), kTol, "chain Hermitian L=" + std::to_string(L));
    const auto [res, at] = global_commutation(chain, rep);
    g.le(res, kTol, "periodic L=" + std::to_string(L) + " at " + at);
    g.note("periodic L=" + std::to_string(L) + " " + format_sig12(res) + (res > kTol ? " (" + at + ")" : ""));
  }
  // Diagnostics only: open boundary and the group-like part of the action.
  double open = 0.0, grp = 0.0;
  for (int L : {2, 3}) {
    open = std::max(open, global_commutation(chain_h(h, L, false), rep).first);
    grp = std::max(grp, group_commutation(chain_h(h, L), rep));
  }
  const double braided = global_commutation(braided_chain_h(h, build_r(rep).braid, 3), rep).first;
  g.note("open " + format_sig12(open) + ", group part " + format_sig12(grp) + ", braid-closed L=3 " + format_sig12(braided));
  const double t = transfer_commutation(twenty_one_vertex_solution(), 3, 5, 20240607);
  g.le(t, 1e-8, "transfer L=3");
  g.note("transfer " + format_sig12(t));
  return g;
}

// ---- 9 ----------------------------------------------------------------------------------

Gate properties() {
  Gate g;
  // Transversal properties on every supported group.
  for (const auto& gp : supported_groups()) {
    const FiniteGroup& G = *gp;
    const auto data = conjugacy_data(G);
    std::vector<int> hits(G.order(), 0);
    for (const auto& c : data.classes) {
      g.expect(c.elements.size() * c.centralizer.size() == static_cast<std::size_t>(G.order()), G.name() + " orbit-stabiliser");
      g.expect(c.transversal.at(c.rep) == G.identity(), G.name() + " alpha at rep");
      std::vector<int> cover(G.order(), 0);
      for (Element s : c.elements) {
        ++hits[s.index];
        g.expect(G.conj(c.transversal.at(s), c.rep) == s, G.name() + " alpha conjugates");
        for (Element z : c.centralizer) ++cover[G.mul(c.transversal.at(s), z).index];
      }
      g.expect(std::all_of(cover.begin(), cover.end(), [](int v) { return v == 1; }), G.name() + " coset cover");
      for (Element x : G.elements())
        for (Element s : c.elements) {
          const Element t = G.conj(x, s);
          const Element z = G.mul(G.mul(G.inv(c.transversal.at(t)), x), c.transversal.at(s));
          g.expect(std::find(c.centralizer.begin(), c.centralizer.end(), z) != c.centralizer.end(),
                   G.name() + " alpha_t^-1 g alpha_s in Z");
        }
    }
    g.expect(std::all_of(hits.begin(), hits.end(), [](int v) { return v == 1; }), G.name() + " class partition");
  }
  // Hopf and quasi-triangular structure of D(D3), symbolically.
  {
    auto d3 = dihedral(3);
    const auto one = DoubleElement::unit(d3);
    const auto basis = double_basis(d3);
    DoubleTensor one_one(d3, 2);
    one_one.add(1.0, {one, one});
    g.le(coproduct(one).distance(one_one), 0.0, "coproduct of unit");
    for (const auto& a : basis) {
      const DoubleTensor d = coproduct(a);
      g.le(coproduct_on_leg(d, 0).distance(coproduct_on_leg(d, 1)), 0.0, "coassociativity");
      g.le(to_element(counit_on_leg(d, 0)).distance(a), 0.0, "left counit");
      g.le(to_element(counit_on_leg(d, 1)).distance(a), 0.0, "right counit");
      g.le(multiply_legs(antipode_on_leg(d, 0)).distance(counit(a) * one), 0.0, "left antipode");
      g.le(multiply_legs(antipode_on_leg(d, 1)).distance(counit(a) * one), 0.0, "right antipode");
      for (const auto& b : basis) {
        g.le(coproduct(a * b).distance(coproduct(a) * coproduct(b)), 0.0, "coproduct multiplicative");
        g.le(std::abs(counit(a * b) - counit(a) * counit(b)), 0.0, "counit multiplicative");
      }
    }
    const DoubleTensor r = universal_r(d3);
    for (const auto& a : basis) g.le((r * coproduct(a)).distance(opposite_coproduct(a) * r), 0.0, "R intertwines");
    const DoubleTensor r12 = embed_legs(r, 3, 0, 1), r13 = embed_legs(r, 3, 0, 2), r23 = embed_legs(r, 3, 1, 2);
    g.le(coproduct_on_leg(r, 0).distance(r13 * r23), 0.0, "qt1");
    g.le(coproduct_on_leg(r, 1).distance(r13 * r12), 0.0, "qt2");
    g.le((r12 * r13 * r23).distance(r23 * r13 * r12), 0.0, "universal YBE");
    g.le((r * antipode_on_leg(r, 0)).distance(one_one), 0.0, "R invertible");
  }
  // Commutants.
  int irreps = 0;
  for (const auto& gp : supported_groups())
    for (const auto& rep : all_double_irreps(gp)) {
      const auto report = verify_irrep(rep);
      g.expect(report.pass() && report.commutant_dim == 1, rep.id() + " commutant " + std::to_string(report.commutant_dim));
      ++irreps;
    }
  const int sum_dim =
      commutant_dimension(direct_sum(find_irrep("dihedral:6/s2t/a0b0"), find_irrep("dihedral:6/s2t1/a1b0")));
  g.expect(sum_dim == 2, "direct sum commutant " + std::to_string(sum_dim));
  g.note(std::to_string(irreps) + " irreps with commutant 1; direct sum " + std::to_string(sum_dim));
  return g;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Gate()>>> criteria{
      {"irrep census", census},
      {"reference matrices", reference_matrices},
      {"constant YBE and quasi-triangularity", constant_ybe},
      {"braid eigenstructure", spectra},
      {"Baxterisation selection", ansatz_selection},
      {"unitarity scalars", unitarity_scalars},
      {"A4 spectral families and limits", a4_solutions_and_limits},
      {"Hamiltonian and chain symmetry", hamiltonian},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Gate g;
    try {
      g = criteria[i].second();
    } catch (const std::exception& e) {
      g.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (g.ok ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first << "  worst=" << format_sig12(g.worst);
    for (const auto& n : g.notes) line << "; " << n;
    if (!g.ok) {
      line << "  | failed:";
      for (const auto& f : g.failures) line << " [" << f << "]";
    }
    line << "  (" << format_sig12(std::round(ms)) << " ms)";
    std::cout << line.str() << "\n";
    failed += !g.ok;
  }
  std::cout << (failed ? "FAILED" : "OK") << "  " << criteria.size() - failed << "/" << criteria.size() << " criteria\n";
  return failed ? 1 : 0;
}
