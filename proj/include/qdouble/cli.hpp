#pragma once

/**
 * @file cli.hpp
 * @brief The `qdouble` command line: irreps, rmatrix, check-constant-ybe, baxterise,
 * check-spectral-ybe, hamiltonian, verify-all.
 *
 * Exit codes: 0 every check passed, 1 a mathematical check failed, 2 usage or input error.
 * Data commands (irreps, rmatrix) print JSON; the others print a text report. With
 * --json PATH every command also writes its full JSON document to PATH.
 */

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qdouble/baxter.hpp"
#include "qdouble/chains.hpp"
#include "qdouble/io.hpp"
#include "qdouble/reps.hpp"
#include "qdouble/ybe.hpp"

namespace qdouble::cli {

inline constexpr std::uint32_t kDefaultSeed = 20240607;
inline constexpr int kSamples = 50;
inline constexpr double kRejectTol = 1e-3;  // negative controls must exceed this
inline constexpr double kLimitTol = 0.5;    // "not proportional" must exceed this
inline constexpr double kFaultSize = 1e-3;

struct Context {
  std::ostream& out;
  std::ostream& err;
  Tolerances tol;
  std::uint32_t seed = kDefaultSeed;
  std::string json_path;
  bool fault = false;
};

struct BuiltinParams {
  int n = 5;
  int j = 1;
  int b = 1;
};

using Target = std::variant<SpectralRMatrix, AdditiveSolution>;

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"sixvertex", "21vertex", "a4-exp", "a4-twist", "a4-hecke"};
  return names;
}

inline bool is_builtin(const std::string& name) {
  return std::find(builtin_names().begin(), builtin_names().end(), name) != builtin_names().end();
}

inline Target resolve_builtin(const std::string& name, const BuiltinParams& p) {
  if (name == "sixvertex") return six_vertex_solution(p.n, p.j);
  if (name == "21vertex") return twenty_one_vertex_solution();
  if (name == "a4-exp") return a4_solutions(1, p.b).at(0);
  if (name == "a4-twist") return a4_solutions(1, p.b).at(1);
  if (name == "a4-hecke") return a4_solutions(0, p.b).at(0);
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

/// The constant braid matrix a builtin was derived from.
inline Matrix builtin_source_braid(const std::string& name, const BuiltinParams& p) {
  if (name == "sixvertex") return build_r(find_irrep("dihedral:" + std::to_string(p.n) + "/s1/j" + std::to_string(p.j))).braid;
  if (name == "21vertex") return build_r(find_irrep("dihedral:6/s2t/a0b0")).braid;
  return std::get<AdditiveSolution>(resolve_builtin(name, p)).source_braid;
}

inline void apply_fault(Matrix& m) { m(0, m.cols() - 1) += kFaultSize; }

inline void apply_fault(SpectralRMatrix& rx) {
  rx.entries(0, 0) += Laurent1::constant(kFaultSize, rx.entries(0, 0).names());
}

inline void apply_fault(AdditiveSolution& s) {
  auto f = s.evaluator;
  s.evaluator = [f](Scalar u) {
    Matrix m = f(u);
    apply_fault(m);
    return m;
  };
}

inline int site_dim_of(long n) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (static_cast<long>(d) * d != n || d < 1) throw std::invalid_argument("matrix size must be a perfect square");
  return d;
}

inline Json lambda_json(const std::array<Scalar, 3>& l) {
  Json a = Json::array();
  for (const Scalar& v : l) a.push_back({round_sig12(v.real()), round_sig12(v.imag())});
  return a;
}

/// Writes --json output, prints the text report, and maps the verdict to an exit code.
inline int finish(Context& ctx, const RunReport& report, Json payload) {
  payload["report"] = to_json(report);
  if (!ctx.json_path.empty()) write_json_file(ctx.json_path, payload);
  print_report(report, ctx.out);
  return report.pass() ? 0 : 1;
}

// ---- shared verification blocks ----------------------------------------------------------

inline void constant_checks(RunReport& rep, const std::string& target, const Matrix& r, int d, const Tolerances& tol) {
  const Matrix braid = swap_matrix(d) * r;
  rep.add(make_check("constant-ybe", target, check_constant_ybe(r, d), tol.entry_tol));
  rep.add(make_check("braid-relation", target, check_constant_braid(braid, d), tol.entry_tol));
  rep.add(make_check("braid-unitary", target, unitarity_residual(braid), tol.entry_tol));
}

inline void spectral_checks(RunReport& rep, const std::string& target, const SpectralRMatrix& rx,
                            const std::optional<Matrix>& source, const Tolerances& tol) {
  rep.add(make_check("braid-ybe-laurent", target, check_braid_ybe_laurent(rx), tol.entry_tol));
  rep.add(make_check("unitarity", target, unitarity(rx).residual, tol.entry_tol));
  rep.add(make_check("regularity", target, regularity(rx).second, tol.entry_tol));
  if (source) rep.add(make_check("limit-x0-proportional", target, laurent_limit_against(rx, *source).proportionality, tol.entry_tol));
}

inline void additive_checks(RunReport& rep, const std::string& target, const AdditiveSolution& s, std::uint32_t seed,
                            const Tolerances& tol) {
  rep.add(make_check("braid-ybe-sampled", target, check_braid_ybe_numeric(s, kSamples, seed), tol.entry_tol));
  rep.add(make_check("regularity", target, identity_multiple(s.evaluator(0.0)).second, tol.entry_tol));
  if (s.functions) {
    rep.add(make_check("functional-relations", target, functional_residuals(*s.functions, kSamples, seed).worst(), tol.entry_tol));
  }
  if (s.family != "hecke-linear") {
    rep.add(make_check("limit-not-proportional", target, additive_limit_against(s).proportionality, kLimitTol, true));
  }
}

/// Accepts a bare matrix document or a baxterise output (matrix under "solution").
inline Json unwrap_solution(const Json& doc) {
  if (doc.is_object() && doc.contains("solution") && doc["solution"].contains("entries")) return doc["solution"];
  return doc;
}

// ---- commands ---------------------------------------------------------------------------

inline int cmd_irreps(Context& ctx, const std::string& group_spec) {
  const GroupPtr g = parse_group_spec(group_spec);
  const auto irreps = all_double_irreps(g);
  Json rows = Json::array();
  long sum = 0;
  for (const auto& r : irreps) {
    rows.push_back({{"id", r.id()}, {"dim", r.dim}, {"class", r.class_label}, {"base", r.base_label}});
    sum += static_cast<long>(r.dim) * r.dim;
  }
  const long order_sq = static_cast<long>(g->order()) * g->order();
  Json doc{{"group", g->name()}, {"count", irreps.size()}, {"irreps", rows}, {"sum_dim2", sum}, {"order_squared", order_sq}};
  if (!ctx.json_path.empty()) write_json_file(ctx.json_path, doc);
  ctx.out << doc.dump(2) << "\n";
  return sum == order_sq ? 0 : 1;
}

inline int cmd_rmatrix(Context& ctx, const std::string& id, bool braid) {
  const ConstantRMatrix r = build_r(find_irrep(id));
  Json doc = constant_to_json(braid ? r.braid : r.r);
  if (!ctx.json_path.empty()) write_json_file(ctx.json_path, doc);
  ctx.out << doc.dump() << "\n";
  return 0;
}

inline int cmd_check_constant(Context& ctx, const std::string& id, const std::string& matrix_path, bool braid_form) {
  RunReport rep("check-constant-ybe", ctx.seed);
  Matrix r;
  std::string target;
  std::optional<DoubleIrrep> irrep;
  if (!matrix_path.empty()) {
    r = constant_from_json(read_json_file(matrix_path));
    if (braid_form) r = swap_matrix(site_dim_of(r.rows())) * r;
    target = matrix_path;
  } else if (!id.empty()) {
    irrep = find_irrep(id);
    r = build_r(*irrep).r;
    target = id;
  } else {
    throw std::invalid_argument("check-constant-ybe needs an irrep id or --matrix");
  }
  const int d = site_dim_of(r.rows());
  if (ctx.fault) apply_fault(r);
  constant_checks(rep, target, r, d, ctx.tol);
  if (irrep && !ctx.fault) {
    const auto qt = check_quasi_triangularity(*irrep);
    rep.add(make_check("qt1", target, qt.qt1, ctx.tol.entry_tol));
    rep.add(make_check("qt2", target, qt.qt2, ctx.tol.entry_tol));
    rep.add(make_check("qt3", target, qt.qt3, ctx.tol.entry_tol));
    rep.add(make_check("coproduct-symmetry", target, check_symmetry(build_r(*irrep).braid, *irrep), ctx.tol.entry_tol));
  }
  return finish(ctx, rep, {{"target", target}, {"r", constant_to_json(r)}});
}

inline Json candidate_json(const AnsatzCandidate& c, double residual, bool survives) {
  return {{"ordering", c.ordering},
          {"lambda", lambda_json(c.lambda)},
          {"f", laurent_to_json(c.coeffs.f)},
          {"g", laurent_to_json(c.coeffs.g)},
          {"h", laurent_to_json(c.coeffs.h)},
          {"residual", round_sig12(residual)},
          {"survives", survives},
          {"matrix", spectral_to_json(c.matrix.entries)}};
}

inline int cmd_baxterise(Context& ctx, const std::string& target, std::string method, bool check, const BuiltinParams& p) {
  RunReport rep("baxterise", ctx.seed);
  const bool builtin = is_builtin(target);
  if (method.empty()) method = builtin ? "closed-form" : "ansatz";
  Json doc{{"target", target}, {"method", method}};

  if (method == "closed-form") {
    if (!builtin) throw std::invalid_argument("closed-form needs a builtin name");
    Target t = resolve_builtin(target, p);
    if (auto* rx = std::get_if<SpectralRMatrix>(&t)) {
      if (ctx.fault) apply_fault(*rx);
      rep.add(make_check("braid-ybe-laurent", target, check_braid_ybe_laurent(*rx), ctx.tol.entry_tol));
      if (check) {
        RunReport extra;
        spectral_checks(extra, target, *rx, builtin_source_braid(target, p), ctx.tol);
        for (auto& c : extra.checks)
          if (c.check != "braid-ybe-laurent") rep.add(c);
      }
      doc["solution"] = spectral_to_json(rx->entries);
      doc["braid_form"] = true;
    } else {
      auto& s = std::get<AdditiveSolution>(t);
      if (ctx.fault) apply_fault(s);
      if (check) {
        additive_checks(rep, target, s, ctx.seed, ctx.tol);
      } else {
        rep.add(make_check("braid-ybe-sampled", target, check_braid_ybe_numeric(s, kSamples, ctx.seed), ctx.tol.entry_tol));
      }
      Json params = Json::object();
      for (const auto& [k, v] : s.params) params[k] = {round_sig12(v.real()), round_sig12(v.imag())};
      doc["solution"] = {{"family", s.family}, {"params", params}, {"note", s.note}, {"at_u_1", constant_to_json(s.evaluator(1.0))}};
    }
    return finish(ctx, rep, doc);
  }

  if (method != "ansatz") throw std::invalid_argument("--method must be ansatz or closed-form");
  Matrix braid = builtin ? builtin_source_braid(target, p) : build_r(find_irrep(target)).braid;
  if (ctx.fault) apply_fault(braid);
  const auto cands = enumerate_candidates(braid, ctx.tol);
  Json list = Json::array();
  int survivors = 0;
  for (const auto& c : cands) {
    const double res = check_braid_ybe_laurent(c.matrix);
    const bool ok = res <= ctx.tol.entry_tol && !c.coeffs.f.is_zero();
    list.push_back(candidate_json(c, res, ok));
    ctx.out << "candidate ordering=(" << c.ordering[0] << "," << c.ordering[1] << "," << c.ordering[2]
            << ") lambda2=" << format_sig12(c.lambda[1]) << (c.coeffs.f.is_zero() ? " f=0" : "")
            << " residual=" << format_sig12(res) << (ok ? " survives" : " rejected") << "\n";
    if (!ok) continue;
    ++survivors;
    if (check) {
      const std::string tag = target + "#" + std::to_string(survivors);
      rep.add(make_check("unitarity", tag, unitarity(c.matrix).residual, ctx.tol.entry_tol));
      rep.add(make_check("limit-x0-proportional", tag, laurent_limit_against(c.matrix, braid).proportionality, ctx.tol.entry_tol));
    }
  }
  rep.add(make_check("nontrivial-survivor", target, survivors > 0 ? 0.0 : 1.0, 0.0));
  doc["candidates"] = list;
  doc["survivors"] = survivors;
  return finish(ctx, rep, doc);
}

inline int cmd_check_spectral(Context& ctx, const std::string& target, const std::string& matrix_path, const BuiltinParams& p) {
  RunReport rep("check-spectral-ybe", ctx.seed);
  Json doc{{"target", matrix_path.empty() ? target : matrix_path}};
  if (!matrix_path.empty()) {
    const LaurentMatrix m = spectral_from_json(unwrap_solution(read_json_file(matrix_path)));
    SpectralRMatrix rx{site_dim_of(static_cast<long>(m.rows())), m, matrix_path};
    if (ctx.fault) apply_fault(rx);
    spectral_checks(rep, matrix_path, rx, std::nullopt, ctx.tol);
    return finish(ctx, rep, doc);
  }
  if (!is_builtin(target)) throw std::invalid_argument("check-spectral-ybe needs a builtin name or --matrix");
  Target t = resolve_builtin(target, p);
  if (auto* rx = std::get_if<SpectralRMatrix>(&t)) {
    if (ctx.fault) apply_fault(*rx);
    spectral_checks(rep, target, *rx, builtin_source_braid(target, p), ctx.tol);
  } else {
    auto& s = std::get<AdditiveSolution>(t);
    if (ctx.fault) apply_fault(s);
    additive_checks(rep, target, s, ctx.seed, ctx.tol);
  }
  return finish(ctx, rep, doc);
}

inline int cmd_hamiltonian(Context& ctx, const std::string& target, const std::string& matrix_path, int sites,
                           const BuiltinParams& p) {
  RunReport rep("hamiltonian", ctx.seed);
  SpectralRMatrix rx;
  Laurent1 prefactor = lx(1.0, 0);
  std::string name = target;
  if (!matrix_path.empty()) {
    const LaurentMatrix m = spectral_from_json(unwrap_solution(read_json_file(matrix_path)));
    rx = {site_dim_of(static_cast<long>(m.rows())), m, matrix_path};
    name = matrix_path;
  } else {
    if (target != "sixvertex" && target != "21vertex") throw std::invalid_argument("hamiltonian builtins: sixvertex, 21vertex");
    rx = std::get<SpectralRMatrix>(resolve_builtin(target, p));
    if (target == "21vertex") prefactor = lx(kI, -1);
  }
  if (ctx.fault) apply_fault(rx);
  Json doc{{"target", name}, {"prefactor", laurent_to_json(prefactor)}};

  TwoSiteHamiltonian h;
  try {
    h = two_site_h(rx, prefactor, 0.0, ctx.tol);
  } catch (const NotRegular&) {
    rep.add(make_check("regularity", name, regularity(rx).second, ctx.tol.entry_tol));
    return finish(ctx, rep, doc);
  }
  rep.add(make_check("regularity", name, regularity(rx).second, ctx.tol.entry_tol));
  auto phase = hermitian_phase(h.matrix, ctx.tol.entry_tol);
  if (!phase && !matrix_path.empty()) {
    // A file carries no prefactor; dividing by x strips the identity part left by Ř(1).
    TwoSiteHamiltonian alt = two_site_h(rx, lx(1.0, -1), 0.0, ctx.tol);
    if (auto p2 = hermitian_phase(alt.matrix, ctx.tol.entry_tol)) {
      prefactor = lx(1.0, -1);
      doc["prefactor"] = laurent_to_json(prefactor);
      h = std::move(alt);
      phase = p2;
    }
  }
  const Scalar c = phase.value_or(1.0);
  h.matrix *= c;
  if (phase && *phase != Scalar{1.0}) h.scaling_note += "; multiplied by the recorded phase";
  rep.add(make_check("hermitian", name, hermiticity_residual(h.matrix), ctx.tol.entry_tol));
  if (target == "21vertex" && matrix_path.empty()) {
    rep.add(make_check("permutation-form", name, max_abs(h.matrix - permutation_form_h().matrix), ctx.tol.entry_tol));
    const Matrix sw = swap_matrix(3);
    rep.add(make_check("site-exchange-antisymmetry", name, max_abs(sw * h.matrix * sw + h.matrix), ctx.tol.entry_tol));
  }
  doc["phase"] = {round_sig12(c.real()), round_sig12(c.imag())};
  doc["scaling_note"] = h.scaling_note;
  doc["two_site"] = constant_to_json(h.matrix);
  if (sites >= 2) {
    const ChainHamiltonian chain = chain_h(h, sites);
    rep.add(make_check("chain-hermitian", name + " L=" + std::to_string(sites), hermiticity_residual(chain.matrix), ctx.tol.entry_tol));
    doc["chain"] = constant_to_json(chain.matrix);
    doc["sites"] = sites;
  }
  ctx.out << "two-site h (phase " << format_sig12(c) << "):\n";
  for (Eigen::Index r = 0; r < h.matrix.rows(); ++r) {
    for (Eigen::Index col = 0; col < h.matrix.cols(); ++col) ctx.out << (col ? " " : "  ") << format_sig12(h.matrix(r, col));
    ctx.out << "\n";
  }
  return finish(ctx, rep, doc);
}

inline int cmd_verify_all(Context& ctx, const std::string& group_spec) {
  RunReport rep("verify-all", ctx.seed);
  const GroupPtr g = parse_group_spec(group_spec);
  const auto irreps = all_double_irreps(g);
  const double tol = ctx.tol.entry_tol;
  long sum = 0;
  bool faulted = false;
  for (const auto& irrep : irreps) {
    const std::string id = irrep.id();
    sum += static_cast<long>(irrep.dim) * irrep.dim;
    for (const auto& c : verify_irrep(irrep, ctx.tol).checks) {
      rep.add(c.name == "commutant-dimension" ? make_check("irrep/" + c.name, id, std::abs(c.residual - 1.0), 0.0)
                                              : make_check("irrep/" + c.name, id, c.residual, tol));
    }
    Matrix r = build_r(irrep).r;
    if (ctx.fault && !faulted && irrep.dim >= 2) {
      apply_fault(r);
      faulted = true;
    }
    constant_checks(rep, id, r, irrep.dim, ctx.tol);
    if (irrep.dim <= 3) {
      const auto qt = check_quasi_triangularity(irrep);
      rep.add(make_check("qt", id, std::max({qt.qt1, qt.qt2, qt.qt3}), tol));
    }
  }
  const long order_sq = static_cast<long>(g->order()) * g->order();
  rep.add(make_check("census", g->name(), static_cast<double>(std::labs(sum - order_sq)), 0.0));

  if (g->kind() == GroupKind::Dihedral) {
    const int n = g->order() / 2;
    for (int j = 1; j < n; ++j) {
      if ((4 * j) % n == 0) continue;  // fewer than three eigenvalues
      const std::string id = g->name() + "/s1/j" + std::to_string(j);
      const Matrix braid = build_r(find_irrep(id)).braid;
      const auto six = six_vertex_solution(n, j);
      spectral_checks(rep, "sixvertex:n=" + std::to_string(n) + ",j=" + std::to_string(j), six, braid, ctx.tol);
      double best = 1.0;
      for (const auto& c : enumerate_candidates(braid, ctx.tol))
        if (!c.coeffs.f.is_zero()) best = proportional_laurent(c.matrix.entries, six.entries) ? 0.0 : best;
      rep.add(make_check("ansatz-matches-closed-form", id, best, 0.0));
    }
    if (n == 6) {
      const Matrix braid = build_r(find_irrep("dihedral:6/s2t/a0b0")).braid;
      for (const auto& c : enumerate_candidates(braid, ctx.tol)) {
        const std::string tag = "dihedral:6/s2t/a0b0 lambda2=" + format_sig12(c.lambda[1]);
        const bool first_row = std::abs(c.lambda[1] - 1.0) <= 1e-9;
        rep.add(make_check(first_row ? "braid-ybe-laurent" : "braid-ybe-laurent:rejected", tag,
                           check_braid_ybe_laurent(c.matrix), first_row ? tol : kRejectTol, !first_row));
      }
      const auto rx = twenty_one_vertex_solution();
      spectral_checks(rep, "21vertex", rx, braid, ctx.tol);
      const auto h = two_site_h(rx, lx(kI, -1), 0.0, ctx.tol);
      rep.add(make_check("permutation-form", "21vertex", max_abs(h.matrix - permutation_form_h().matrix), tol));
      rep.add(make_check("hermitian", "21vertex", hermiticity_residual(h.matrix), tol));
      rep.add(make_check("transfer-commutation", "21vertex L=3", transfer_commutation(rx, 3, 3, ctx.seed), 1e-8));
    }
  } else if (g->kind() == GroupKind::Alternating) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (const auto& s : a4_solutions(a, b))
          additive_checks(rep, s.family + ":a" + std::to_string(a) + "b" + std::to_string(b), s, ctx.seed, ctx.tol);
    for (const auto& c : enumerate_candidates(a4_normalized_braid(1), ctx.tol))
      if (!c.coeffs.f.is_zero())
        rep.add(make_check("braid-ybe-laurent:rejected", "a4 nonstandard", check_braid_ybe_laurent(c.matrix), kRejectTol, true));
  }
  return finish(ctx, rep, {{"group", g->name()}, {"irreps", irreps.size()}});
}

// ---- entry point ------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Quantum-double R-matrices, Baxterisation and spin chains"};
  app.name("qdouble");
  app.require_subcommand(1);
  app.fallthrough();

  std::uint32_t seed = kDefaultSeed;
  double tol = 1e-9;
  std::string json_path;
  bool fault = false;
  app.add_option("--seed", seed, "Seed for random sampling");
  app.add_option("--tol", tol, "Entry tolerance");
  app.add_option("--json", json_path, "Write the JSON document to this path");
  app.add_flag("--fault", fault, "Corrupt one matrix entry (negative control)");

  std::string group, id, target, method, matrix_path;
  bool braid = false, check = false;
  int sites = 0;
  BuiltinParams params;
  auto builtin_opts = [&](CLI::App* s) {
    s->add_option("--n", params.n, "Six-vertex: dihedral order n");
    s->add_option("--j", params.j, "Six-vertex: irrep label j");
    s->add_option("--b", params.b, "A_4 families: b in {0,1}");
  };

  auto* irreps = app.add_subcommand("irreps", "List the irreps of D(G)");
  irreps->add_option("group", group, "dihedral:<n>, cyclic:<n>, alternating:4, symmetric:4")->required();

  auto* rmatrix = app.add_subcommand("rmatrix", "Constant R (or braid form) for an irrep");
  rmatrix->add_option("irrep", id, "<group>/<class>/<base>")->required();
  rmatrix->add_flag("--braid", braid, "Emit PR instead of R");

  auto* cyb = app.add_subcommand("check-constant-ybe", "Verify a constant R-matrix");
  cyb->add_option("irrep", id, "<group>/<class>/<base>");
  cyb->add_option("--matrix", matrix_path, "Constant-matrix JSON file");
  cyb->add_flag("--braid", braid, "The file holds the braid form PR");

  auto* bax = app.add_subcommand("baxterise", "Spectral-parameter solutions from a constant braid matrix");
  bax->add_option("target", target, "irrep id or builtin (sixvertex, 21vertex, a4-exp, a4-twist, a4-hecke)")->required();
  bax->add_option("--method", method, "ansatz | closed-form")->check(CLI::IsMember({"ansatz", "closed-form"}));
  bax->add_flag("--check", check, "Run every applicable verification");
  builtin_opts(bax);

  auto* syb = app.add_subcommand("check-spectral-ybe", "Verify a spectral solution");
  syb->add_option("target", target, "builtin name");
  syb->add_option("--matrix", matrix_path, "Spectral-matrix JSON file (braid form)");
  builtin_opts(syb);

  auto* ham = app.add_subcommand("hamiltonian", "Two-site and chain Hamiltonians");
  ham->add_option("target", target, "sixvertex | 21vertex");
  ham->add_option("--matrix", matrix_path, "Spectral-matrix JSON file (braid form)");
  ham->add_option("--sites", sites, "Also build the periodic chain on this many sites")->check(CLI::Range(0, 6));
  builtin_opts(ham);

  auto* all = app.add_subcommand("verify-all", "Every check for one group");
  all->add_option("group", group, "group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx{out, err, Tolerances(tol, 1e-6), seed, json_path, fault};
    if (*irreps) return cmd_irreps(ctx, group);
    if (*rmatrix) return cmd_rmatrix(ctx, id, braid);
    if (*cyb) return cmd_check_constant(ctx, id, matrix_path, braid);
    if (*bax) return cmd_baxterise(ctx, target, method, check, params);
    if (*syb) return cmd_check_spectral(ctx, target, matrix_path, params);
    if (*ham) return cmd_hamiltonian(ctx, target, matrix_path, sites, params);
    if (*all) return cmd_verify_all(ctx, group);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedGroup& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedCentralizer& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const WrongEigenvalueCount& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qdouble"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qdouble::cli
