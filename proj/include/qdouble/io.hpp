#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings and verification reports. Every number is written with 12
 * significant digits.
 *
 *   Laurent1:        {"var":"x","terms":[[exp,re,im],...]}           exponents ascending
 *   constant matrix: {"dim":n,"entries":[[row,col,re,im],...]}      zeros omitted, row-major
 *   spectral matrix: {"dim":n,"var":"x","entries":[[row,col,[[exp,re,im],...]],...]}
 *   check:           {"check","target","residual","tolerance","pass"}
 */

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdouble/laurent.hpp"
#include "qdouble/linalg.hpp"
#include "qdouble/scalars.hpp"

namespace qdouble {

using Json = nlohmann::json;

inline std::string format_sig12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_sig12(Scalar z) {
  if (z.imag() == 0.0) return format_sig12(z.real());
  return format_sig12(z.real()) + (z.imag() < 0 ? "-" : "+") + format_sig12(std::abs(z.imag())) + "i";
}

// ---- Laurent polynomials and matrices ----------------------------------------------

inline Json terms_to_json(const Laurent1& p) {
  Json t = Json::array();
  for (const auto& [e, c] : p.terms()) t.push_back({e[0], round_sig12(c.real()), round_sig12(c.imag())});
  return t;
}

inline Laurent1 terms_from_json(const Json& t, const std::string& var) {
  Laurent1::Terms terms;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != 3) throw std::invalid_argument("Laurent term must be [exp, re, im]");
    terms[{row[0].get<int>()}] += Scalar{row[1].get<double>(), row[2].get<double>()};
  }
  return Laurent1({var}, std::move(terms));
}

inline Json laurent_to_json(const Laurent1& p) { return {{"var", p.names()[0]}, {"terms", terms_to_json(p)}}; }

inline Laurent1 laurent_from_json(const Json& j) {
  return terms_from_json(j.at("terms"), j.value("var", std::string("x")));
}

inline Json constant_to_json(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("constant_to_json: square matrix expected");
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double re = round_sig12(m(r, c).real()), im = round_sig12(m(r, c).imag());
      if (re != 0.0 || im != 0.0) entries.push_back({r, c, re, im});
    }
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

inline Matrix constant_from_json(const Json& j) {
  const long n = j.at("dim").get<long>();
  if (n < 1) throw std::invalid_argument("constant matrix: dim must be positive");
  Matrix m = Matrix::Zero(n, n);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("constant entry must be [row, col, re, im]");
    const long r = e[0].get<long>(), c = e[1].get<long>();
    if (r < 0 || c < 0 || r >= n || c >= n) throw std::invalid_argument("constant entry out of range");
    m(r, c) = Scalar{e[2].get<double>(), e[3].get<double>()};
  }
  return m;
}

inline Json spectral_to_json(const LaurentMatrix& m, const std::string& var = "x") {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) entries.push_back({r, c, terms_to_json(m(r, c))});
  return {{"dim", m.rows()}, {"var", var}, {"entries", std::move(entries)}};
}

inline LaurentMatrix spectral_from_json(const Json& j) {
  const long n = j.at("dim").get<long>();
  if (n < 1) throw std::invalid_argument("spectral matrix: dim must be positive");
  const std::string var = j.value("var", std::string("x"));
  LaurentMatrix m(n, n, Laurent1({var}));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("spectral entry must be [row, col, terms]");
    const long r = e[0].get<long>(), c = e[1].get<long>();
    if (r < 0 || c < 0 || r >= n || c >= n) throw std::invalid_argument("spectral entry out of range");
    m(r, c) = terms_from_json(e[2], var);
  }
  return m;
}

// ---- reports --------------------------------------------------------------------------

struct CheckResult {
  std::string check;
  std::string target;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// residual <= tolerance passes; `reject` flips it for negative controls (residual must exceed).
inline CheckResult make_check(std::string check, std::string target, double residual, double tolerance, bool reject = false) {
  const bool ok = reject ? residual > tolerance : residual <= tolerance;
  return {std::move(check), std::move(target), residual, tolerance, ok && std::isfinite(residual)};
}

inline Json to_json(const CheckResult& c) {
  return {{"check", c.check}, {"target", c.target}, {"residual", round_sig12(c.residual)},
          {"tolerance", round_sig12(c.tolerance)}, {"pass", c.pass}};
}

struct RunReport {
  explicit RunReport(std::string cmd = {}, std::uint32_t s = 0) : command(std::move(cmd)), seed(s) {}

  std::string command;
  std::vector<CheckResult> checks;
  std::uint32_t seed = 0;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  }
};

inline Json to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"command", r.command}, {"seed", r.seed}, {"pass", r.pass()}, {"elapsed_ms", round_sig12(r.elapsed_ms())},
          {"checks", std::move(checks)}};
}

inline void print_report(const RunReport& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.check << "  " << c.target << "  residual=" << format_sig12(c.residual)
        << "  tol=" << format_sig12(c.tolerance) << "\n";
  }
  out << (r.pass() ? "OK" : "FAILED") << "  " << r.command << "  checks=" << r.checks.size() << "  seed=" << r.seed << "\n";
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("bad JSON in '" + path + "': " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace qdouble
