#pragma once

/**
 * @file groups.hpp
 * @brief Small finite groups as dense multiplication tables, with conjugacy classes,
 * centralizers and coset transversals.
 *
 * Dihedral elements are stored in normal form s^i t^j at index i + n j. Permutation
 * groups are enumerated in lexicographic order of one-line notation and compose
 * right-to-left: (f g)(x) = f(g(x)), so (12)(13) = (132).
 */

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdouble/scalars.hpp"

namespace qdouble {

/// Index into a group's element table.
struct Element {
  int index = 0;
  constexpr auto operator<=>(const Element&) const = default;
};

enum class GroupKind { Dihedral, Symmetric, Alternating, Cyclic };

class FiniteGroup {
public:
  FiniteGroup(std::string name, GroupKind kind, int parameter, std::vector<std::vector<int>> mul,
              std::vector<std::string> labels, std::vector<Element> generators,
              std::vector<std::vector<int>> perms = {})
      : name_(std::move(name)),
        kind_(kind),
        parameter_(parameter),
        mul_(std::move(mul)),
        labels_(std::move(labels)),
        generators_(std::move(generators)),
        perms_(std::move(perms)) {
    const int n = order();
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) ok = mul_[e][g] == g && mul_[g][e] == g;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
    inv_.assign(n, -1);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (mul_[g][h] == identity_ && mul_[h][g] == identity_) inv_[g] = h;
    if (std::find(inv_.begin(), inv_.end(), -1) != inv_.end()) {
      throw std::invalid_argument("FiniteGroup: missing inverse");
    }
  }

  const std::string& name() const { return name_; }
  GroupKind kind() const { return kind_; }
  /// n for dihedral:n, symmetric:n, cyclic:n; 4 for alternating:4.
  int parameter() const { return parameter_; }
  int order() const { return static_cast<int>(mul_.size()); }

  Element identity() const { return {identity_}; }
  Element mul(Element a, Element b) const { return {mul_[a.index][b.index]}; }
  Element inv(Element a) const { return {inv_[a.index]}; }
  /// g s g^-1
  Element conj(Element g, Element s) const { return mul(mul(g, s), inv(g)); }
  Element power(Element g, int k) const {
    Element r = identity();
    const Element base = k >= 0 ? g : inv(g);
    for (int i = 0; i < std::abs(k); ++i) r = mul(r, base);
    return r;
  }
  int element_order(Element g) const {
    int k = 1;
    for (Element x = g; x != identity(); x = mul(x, g)) ++k;
    return k;
  }

  const std::string& label(Element g) const { return labels_.at(g.index); }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

  std::vector<Element> elements() const {
    std::vector<Element> out(order());
    for (int i = 0; i < order(); ++i) out[i] = {i};
    return out;
  }

  Element find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown element '" + label + "' in " + name_);
    return {static_cast<int>(it - labels_.begin())};
  }

  // Dihedral normal form s^i t^j.
  Element dihedral(int i, int j) const {
    require(GroupKind::Dihedral);
    return {static_cast<int>(floor_mod(i, parameter_) + parameter_ * floor_mod(j, 2))};
  }
  /// (i, j) with g = s^i t^j.
  std::pair<int, int> dihedral_form(Element g) const {
    require(GroupKind::Dihedral);
    return {g.index % parameter_, g.index / parameter_};
  }

  bool is_permutation_group() const { return !perms_.empty(); }
  /// 0-based images of a permutation element.
  const std::vector<int>& permutation(Element g) const {
    if (perms_.empty()) throw std::logic_error(name_ + " is not a permutation group");
    return perms_.at(g.index);
  }
  /// Looks up an element from 1-based one-line notation.
  Element from_one_line(const std::vector<int>& images) const {
    std::vector<int> zero_based(images.size());
    std::transform(images.begin(), images.end(), zero_based.begin(), [](int v) { return v - 1; });
    auto it = std::find(perms_.begin(), perms_.end(), zero_based);
    if (it == perms_.end()) throw std::invalid_argument("permutation not in " + name_);
    return {static_cast<int>(it - perms_.begin())};
  }

private:
  void require(GroupKind k) const {
    if (kind_ != k) throw std::logic_error("wrong group kind for this query: " + name_);
  }

  std::string name_;
  GroupKind kind_;
  int parameter_;
  std::vector<std::vector<int>> mul_;
  std::vector<std::string> labels_;
  std::vector<Element> generators_;
  std::vector<std::vector<int>> perms_;
  int identity_ = 0;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// ---- constructors ---------------------------------------------------------

inline GroupPtr dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
  const int order = 2 * n;
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    const int i1 = a % n, j1 = a / n;
    for (int b = 0; b < order; ++b) {
      const int i2 = b % n, j2 = b / n;
      const int i = static_cast<int>(floor_mod(i1 + (j1 == 0 ? i2 : -i2), n));
      mul[a][b] = i + n * ((j1 + j2) % 2);
    }
    std::string s = i1 == 0 ? "" : (i1 == 1 ? "s" : "s^" + std::to_string(i1));
    if (j1 == 1) s += s.empty() ? "t" : " t";
    labels[a] = s.empty() ? "e" : s;
  }
  return std::make_shared<const FiniteGroup>("dihedral:" + std::to_string(n), GroupKind::Dihedral, n, std::move(mul),
                                             std::move(labels), std::vector<Element>{{1}, {n}});
}

inline GroupPtr cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    labels[a] = a == 0 ? "e" : (a == 1 ? "c" : "c^" + std::to_string(a));
  }
  std::vector<Element> gens;
  if (n > 1) gens.push_back({1});
  return std::make_shared<const FiniteGroup>("cyclic:" + std::to_string(n), GroupKind::Cyclic, n, std::move(mul),
                                             std::move(labels), std::move(gens));
}

/// Cycle notation with 1-based points, smallest point first in each cycle; "e" for the identity.
inline std::string cycle_label(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += "(";
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

inline bool is_even_permutation(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

namespace detail {

inline GroupPtr permutation_group(const std::string& name, GroupKind kind, int n, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even_permutation(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];  // right-to-left
      mul[a][b] = index.at(c);
    }
  }
  auto find = [&](std::vector<int> one_line) {
    for (auto& v : one_line) --v;
    return Element{index.at(one_line)};
  };
  std::vector<Element> gens;
  if (n >= 2) {
    if (even_only) {
      // (123) and (12)(34) generate A_4.
      gens = {find({2, 3, 1, 4}), find({2, 1, 4, 3})};
    } else {
      std::vector<int> cyc(n);
      for (int x = 0; x < n; ++x) cyc[x] = (x + 1) % n + 1;
      std::vector<int> tr(n);
      std::iota(tr.begin(), tr.end(), 1);
      std::swap(tr[0], tr[1]);
      gens = {find(tr), find(cyc)};
    }
  }
  return std::make_shared<const FiniteGroup>(name, kind, n, std::move(mul), std::move(labels), std::move(gens),
                                             std::move(perms));
}

}  // namespace detail

inline GroupPtr symmetric(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("symmetric: n must be in [2, 6]");
  return detail::permutation_group("symmetric:" + std::to_string(n), GroupKind::Symmetric, n, false);
}

inline GroupPtr alternating4() {
  return detail::permutation_group("alternating:4", GroupKind::Alternating, 4, true);
}

/// Parses "dihedral:<n>", "symmetric:<n>", "alternating:4" or "cyclic:<n>".
inline GroupPtr parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad group spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad group parameter in '" + spec + "'");
  }
  if (kind == "dihedral") return dihedral(n);
  if (kind == "symmetric") return symmetric(n);
  if (kind == "cyclic") return cyclic(n);
  if (kind == "alternating") {
    if (n != 4) throw std::invalid_argument("only alternating:4 is supported");
    return alternating4();
  }
  throw std::invalid_argument("unknown group family '" + kind + "'");
}

// ---- conjugacy machinery ----------------------------------------------------

struct ConjugacyClass {
  std::string label;
  Element rep;
  std::vector<Element> elements;  // canonical order; fixes the induced-module basis
  std::vector<Element> centralizer;
  std::map<Element, Element> transversal;  // s -> alpha_s with s = alpha_s rep alpha_s^-1

  std::size_t position(Element s) const {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) throw std::invalid_argument("element not in class " + label);
    return static_cast<std::size_t>(it - elements.begin());
  }
  bool contains(Element s) const { return std::find(elements.begin(), elements.end(), s) != elements.end(); }
};

struct ConjugacyData {
  std::vector<ConjugacyClass> classes;

  const ConjugacyClass& by_label(const std::string& label) const {
    for (const auto& c : classes)
      if (c.label == label) return c;
    throw std::invalid_argument("unknown conjugacy class '" + label + "'");
  }
  std::size_t class_of(Element g) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (classes[k].contains(g)) return k;
    throw std::logic_error("element in no class");
  }
};

/// Z(g) = { h | hg = gh }, in index order.
inline std::vector<Element> centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element h : g.elements())
    if (g.mul(h, x) == g.mul(x, h)) out.push_back(h);
  return out;
}

inline std::vector<Element> conjugacy_orbit(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element h : g.elements()) {
    const Element y = g.conj(h, x);
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Classes and representatives only. Dihedral classes follow the table order
/// e, s^(n/2), s^k, {s^2j t}, {s^2j+1 t} (even n) or e, s^k, {s^i t} (odd n);
/// other groups list classes by their smallest element.
inline ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  ConjugacyData data;
  auto add = [&](std::string label, Element rep, std::vector<Element> elems) {
    ConjugacyClass c;
    c.label = std::move(label);
    c.rep = rep;
    c.elements = std::move(elems);
    data.classes.push_back(std::move(c));
  };
  if (g.kind() == GroupKind::Dihedral) {
    const int n = g.parameter();
    add("e", g.identity(), {g.identity()});
    if (n % 2 == 0) add("s" + std::to_string(n / 2), g.dihedral(n / 2, 0), {g.dihedral(n / 2, 0)});
    const int kmax = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
    for (int k = 1; k <= kmax; ++k) add("s" + std::to_string(k), g.dihedral(k, 0), {g.dihedral(k, 0), g.dihedral(-k, 0)});
    if (n % 2 == 0) {
      std::vector<Element> even, odd;
      for (int i = 0; i < n / 2; ++i) {
        even.push_back(g.dihedral(2 * i, 1));
        odd.push_back(g.dihedral(2 * i + 1, 1));
      }
      add("s2t", g.dihedral(0, 1), even);
      add("s2t1", g.dihedral(1, 1), odd);
    } else {
      std::vector<Element> refl;
      for (int i = 0; i < n; ++i) refl.push_back(g.dihedral(i, 1));
      add("st", g.dihedral(0, 1), refl);
    }
    return data;
  }
  std::vector<bool> seen(g.order(), false);
  for (Element x : g.elements()) {
    if (seen[x.index]) continue;
    auto orbit = conjugacy_orbit(g, x);
    for (Element y : orbit) seen[y.index] = true;
    add(g.label(orbit.front()), orbit.front(), orbit);
  }
  return data;
}

/// Coset representatives alpha_s for s in the class of `rep`, with alpha_rep = e.
/// Canonical choices: the dihedral tables, alpha_(13)(24) = (132), alpha_(14)(23) = (123)
/// in A_4, alpha_(13)(24) = (14), alpha_(14)(23) = (13) in S_4. Anything else takes the
/// first conjugator in index order.
inline std::map<Element, Element> transversal(const FiniteGroup& g, const std::vector<Element>& cls, Element rep) {
  if (std::find(cls.begin(), cls.end(), rep) == cls.end()) {
    throw std::invalid_argument("transversal: representative not in class");
  }
  std::map<Element, Element> alpha;
  auto canonical = [&](Element s) -> std::optional<Element> {
    if (s == rep) return g.identity();
    if (g.kind() == GroupKind::Dihedral) {
      const int n = g.parameter();
      const auto [ri, rj] = g.dihedral_form(rep);
      const auto [si, sj] = g.dihedral_form(s);
      if (rj == 0 && ri != 0 && 2 * ri != n && sj == 0 && si == floor_mod(-ri, n)) return g.dihedral(0, 1);
      if (rj == 1 && n % 2 == 0 && (ri == 0 || ri == 1) && sj == 1) return g.dihedral((si - ri) / 2, 0);
      if (rj == 1 && n % 2 == 1 && ri == 0 && sj == 1) return g.dihedral(((n + 1) / 2) * si, 0);
      return std::nullopt;
    }
    if (g.is_permutation_group() && g.parameter() == 4 && g.label(rep) == "(12)(34)") {
      const bool alt = g.kind() == GroupKind::Alternating;
      if (g.label(s) == "(13)(24)") return g.find(alt ? "(132)" : "(14)");
      if (g.label(s) == "(14)(23)") return g.find(alt ? "(123)" : "(13)");
    }
    return std::nullopt;
  };
  for (Element s : cls) {
    std::optional<Element> a = canonical(s);
    if (!a) {
      for (Element h : g.elements())
        if (g.conj(h, rep) == s) {
          a = h;
          break;
        }
    }
    if (!a || g.conj(*a, rep) != s) throw std::logic_error("transversal: no valid conjugator for " + g.label(s));
    alpha[s] = *a;
  }
  return alpha;
}

/// Full class data: classes, centralizers of the representatives and transversals.
inline ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData data = conjugacy_classes(g);
  for (auto& c : data.classes) {
    c.centralizer = centralizer(g, c.rep);
    c.transversal = transversal(g, c.elements, c.rep);
  }
  return data;
}

}  // namespace qdouble
