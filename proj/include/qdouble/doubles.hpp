#pragma once

/**
 * @file doubles.hpp
 * @brief The quantum double D(G) on the basis { g h* }.
 *
 *   (g1 h1*)(g2 h2*) = delta(h2, g2^-1 h1 g2) (g1 g2) h2*
 *   Delta(g h*)      = sum_k g (k^-1 h)* (x) g k*
 *   S(g h*)          = g^-1 (g h^-1 g^-1)*
 *   eps(g h*)        = delta(h, e)
 *   R                = sum_g g (x) g*
 *
 * A group element g is always stored expanded as sum_h g h*; the unit is sum_h e h*.
 * Tensors are kept as sums of pure tensors (one DoubleElement per leg) and compared in
 * their expanded basis form.
 */

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdouble/groups.hpp"
#include "qdouble/scalars.hpp"

namespace qdouble {

/// The pair (g, h) read as g h*.
struct BasisPair {
  Element g;
  Element h;
  constexpr auto operator<=>(const BasisPair&) const = default;
};

class DoubleElement {
public:
  using Terms = std::map<BasisPair, Scalar>;

  explicit DoubleElement(GroupPtr group) : group_(std::move(group)) {}
  DoubleElement(GroupPtr group, Terms terms) : group_(std::move(group)), terms_(std::move(terms)) { normalize(); }

  static DoubleElement basis(GroupPtr group, Element g, Element h) {
    Terms t;
    t[{g, h}] = 1.0;
    return DoubleElement(std::move(group), std::move(t));
  }
  /// g embedded as sum_h g h*.
  static DoubleElement group_element(GroupPtr group, Element g) {
    Terms t;
    for (Element h : group->elements()) t[{g, h}] = 1.0;
    return DoubleElement(std::move(group), std::move(t));
  }
  /// h* embedded as e h*.
  static DoubleElement dual(GroupPtr group, Element h) {
    const Element e = group->identity();
    return basis(std::move(group), e, h);
  }
  static DoubleElement unit(GroupPtr group) { return group_element(group, group->identity()); }

  const GroupPtr& group() const { return group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DoubleElement& normalize(double tol = kDropTolDouble) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= tol) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  DoubleElement& operator+=(const DoubleElement& o) {
    check_group(o);
    for (const auto& [k, c] : o.terms_) terms_[k] += c;
    return normalize();
  }
  DoubleElement& operator-=(const DoubleElement& o) {
    check_group(o);
    for (const auto& [k, c] : o.terms_) terms_[k] -= c;
    return normalize();
  }
  DoubleElement& operator*=(Scalar s) {
    for (auto& [k, c] : terms_) c *= s;
    return normalize();
  }
  friend DoubleElement operator+(DoubleElement a, const DoubleElement& b) { return a += b; }
  friend DoubleElement operator-(DoubleElement a, const DoubleElement& b) { return a -= b; }
  friend DoubleElement operator*(Scalar s, DoubleElement a) { return a *= s; }

  /// Algebra product.
  friend DoubleElement operator*(const DoubleElement& a, const DoubleElement& b) {
    a.check_group(b);
    const FiniteGroup& G = *a.group_;
    Terms out;
    for (const auto& [p1, c1] : a.terms_)
      for (const auto& [p2, c2] : b.terms_) {
        if (p2.h != G.mul(G.mul(G.inv(p2.g), p1.h), p2.g)) continue;
        out[{G.mul(p1.g, p2.g), p2.h}] += c1 * c2;
      }
    return DoubleElement(a.group_, std::move(out));
  }

  double distance(const DoubleElement& o) const {
    const DoubleElement d = *this - o;
    double m = 0.0;
    for (const auto& [k, c] : d.terms_) m = std::max(m, std::abs(c));
    return m;
  }

  void check_group(const DoubleElement& o) const {
    if (group_ != o.group_ && group_->name() != o.group_->name()) {
      throw std::invalid_argument("DoubleElement: group mismatch");
    }
  }

  static constexpr double kDropTolDouble = 1e-12;

private:
  GroupPtr group_;
  Terms terms_;
};

inline DoubleElement double_product(const DoubleElement& a, const DoubleElement& b) { return a * b; }

inline Scalar counit(const DoubleElement& a) {
  Scalar s{};
  const Element e = a.group()->identity();
  for (const auto& [p, c] : a.terms())
    if (p.h == e) s += c;
  return s;
}

inline DoubleElement antipode(const DoubleElement& a) {
  const FiniteGroup& G = *a.group();
  DoubleElement::Terms out;
  for (const auto& [p, c] : a.terms()) {
    const Element gi = G.inv(p.g);
    out[{gi, G.mul(G.mul(p.g, G.inv(p.h)), gi)}] += c;
  }
  return DoubleElement(a.group(), std::move(out));
}

/// Sum of pure tensors a_1 (x) ... (x) a_r.
class DoubleTensor {
public:
  struct Pure {
    Scalar coeff;
    std::vector<DoubleElement> legs;
  };
  using Key = std::vector<BasisPair>;
  using Expanded = std::map<Key, Scalar>;

  DoubleTensor(GroupPtr group, int rank) : group_(std::move(group)), rank_(rank) {
    if (rank < 1) throw std::invalid_argument("DoubleTensor: rank must be >= 1");
  }

  const GroupPtr& group() const { return group_; }
  int rank() const { return rank_; }
  const std::vector<Pure>& terms() const { return terms_; }

  DoubleTensor& add(Scalar c, std::vector<DoubleElement> legs) {
    if (static_cast<int>(legs.size()) != rank_) throw std::invalid_argument("DoubleTensor: wrong number of legs");
    for (const auto& l : legs) {
      if (l.is_zero()) return *this;
    }
    terms_.push_back({c, std::move(legs)});
    return *this;
  }

  DoubleTensor& operator+=(const DoubleTensor& o) {
    check(o);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  DoubleTensor& operator*=(Scalar s) {
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }

  /// Legwise product in the tensor-power algebra.
  friend DoubleTensor operator*(const DoubleTensor& a, const DoubleTensor& b) {
    a.check(b);
    DoubleTensor out(a.group_, a.rank_);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        std::vector<DoubleElement> legs;
        legs.reserve(a.rank_);
        for (int i = 0; i < a.rank_; ++i) legs.push_back(ta.legs[i] * tb.legs[i]);
        out.add(ta.coeff * tb.coeff, std::move(legs));
      }
    return out;
  }

  /// Canonical basis expansion, near-zero coefficients dropped.
  Expanded expand(double tol = 1e-12) const {
    Expanded out;
    Key key(rank_);
    for (const auto& t : terms_) expand_rec(t, 0, t.coeff, key, out);
    for (auto it = out.begin(); it != out.end();) {
      if (std::abs(it->second) <= tol) {
        it = out.erase(it);
      } else {
        ++it;
      }
    }
    return out;
  }

  /// max |coefficient| of (this - other) in the expanded basis.
  double distance(const DoubleTensor& o) const {
    check(o);
    Expanded a = expand(0.0);
    for (const auto& [k, c] : o.expand(0.0)) a[k] -= c;
    double m = 0.0;
    for (const auto& [k, c] : a) m = std::max(m, std::abs(c));
    return m;
  }

  void check(const DoubleTensor& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("DoubleTensor: rank mismatch");
    if (group_ != o.group_ && group_->name() != o.group_->name()) {
      throw std::invalid_argument("DoubleTensor: group mismatch");
    }
  }

private:
  static void expand_rec(const Pure& t, int leg, Scalar c, Key& key, Expanded& out) {
    if (leg == static_cast<int>(t.legs.size())) {
      out[key] += c;
      return;
    }
    for (const auto& [p, v] : t.legs[leg].terms()) {
      key[leg] = p;
      expand_rec(t, leg + 1, c * v, key, out);
    }
  }

  GroupPtr group_;
  int rank_;
  std::vector<Pure> terms_;
};

/// Delta(a) = sum_k g (k^-1 h)* (x) g k*, extended linearly.
inline DoubleTensor coproduct(const DoubleElement& a) {
  const GroupPtr& gp = a.group();
  const FiniteGroup& G = *gp;
  DoubleTensor out(gp, 2);
  for (const auto& [p, c] : a.terms())
    for (Element k : G.elements()) {
      out.add(c, {DoubleElement::basis(gp, p.g, G.mul(G.inv(k), p.h)), DoubleElement::basis(gp, p.g, k)});
    }
  return out;
}

/// Leg permutation: out leg i carries in leg order[i].
inline DoubleTensor permute_legs(const DoubleTensor& t, const std::vector<int>& order) {
  DoubleTensor out(t.group(), static_cast<int>(order.size()));
  for (const auto& term : t.terms()) {
    std::vector<DoubleElement> legs;
    for (int i : order) legs.push_back(term.legs.at(i));
    out.add(term.coeff, std::move(legs));
  }
  return out;
}

/// Delta^T: the coproduct with its two legs exchanged.
inline DoubleTensor opposite_coproduct(const DoubleElement& a) { return permute_legs(coproduct(a), {1, 0}); }

/// Applies Delta to leg `leg`, raising the rank by one.
inline DoubleTensor coproduct_on_leg(const DoubleTensor& t, int leg) {
  DoubleTensor out(t.group(), t.rank() + 1);
  for (const auto& term : t.terms()) {
    const DoubleTensor d = coproduct(term.legs.at(leg));
    for (const auto& dt : d.terms()) {
      std::vector<DoubleElement> legs(term.legs.begin(), term.legs.begin() + leg);
      legs.push_back(dt.legs[0]);
      legs.push_back(dt.legs[1]);
      legs.insert(legs.end(), term.legs.begin() + leg + 1, term.legs.end());
      out.add(term.coeff * dt.coeff, std::move(legs));
    }
  }
  return out;
}

/// Applies the counit to leg `leg`, lowering the rank by one.
inline DoubleTensor counit_on_leg(const DoubleTensor& t, int leg) {
  if (t.rank() < 2) throw std::invalid_argument("counit_on_leg: rank must be >= 2");
  DoubleTensor out(t.group(), t.rank() - 1);
  for (const auto& term : t.terms()) {
    std::vector<DoubleElement> legs;
    for (int i = 0; i < t.rank(); ++i)
      if (i != leg) legs.push_back(term.legs[i]);
    out.add(term.coeff * counit(term.legs[leg]), std::move(legs));
  }
  return out;
}

inline DoubleTensor antipode_on_leg(const DoubleTensor& t, int leg) {
  DoubleTensor out(t.group(), t.rank());
  for (const auto& term : t.terms()) {
    auto legs = term.legs;
    legs[leg] = antipode(legs[leg]);
    out.add(term.coeff, std::move(legs));
  }
  return out;
}

/// m: a rank-2 tensor to the product of its legs.
inline DoubleElement multiply_legs(const DoubleTensor& t) {
  if (t.rank() != 2) throw std::invalid_argument("multiply_legs: rank must be 2");
  DoubleElement out(t.group());
  for (const auto& term : t.terms()) out += term.coeff * (term.legs[0] * term.legs[1]);
  return out;
}

/// Rank-1 tensor holding a single element.
inline DoubleTensor as_tensor(const DoubleElement& a) {
  DoubleTensor t(a.group(), 1);
  t.add(1.0, {a});
  return t;
}

/// Sum of expanded rank-1 tensor terms back to an element.
inline DoubleElement to_element(const DoubleTensor& t) {
  if (t.rank() != 1) throw std::invalid_argument("to_element: rank must be 1");
  DoubleElement out(t.group());
  for (const auto& term : t.terms()) out += term.coeff * term.legs[0];
  return out;
}

/// Delta iterated (legs - 1) times; legs = 1 gives the element itself.
inline DoubleTensor iterated_coproduct(const DoubleElement& a, int legs) {
  if (legs < 1) throw std::invalid_argument("iterated_coproduct: legs must be >= 1");
  DoubleTensor t = as_tensor(a);
  for (int i = 1; i < legs; ++i) t = coproduct_on_leg(t, i - 1);
  return t;
}

/// R = sum_g g (x) g*.
inline DoubleTensor universal_r(const GroupPtr& group) {
  DoubleTensor r(group, 2);
  for (Element g : group->elements()) {
    r.add(1.0, {DoubleElement::group_element(group, g), DoubleElement::dual(group, g)});
  }
  return r;
}

/// Places a rank-2 tensor on legs (p, q) of a rank-`rank` tensor, unit elsewhere.
inline DoubleTensor embed_legs(const DoubleTensor& t, int rank, int p, int q) {
  if (t.rank() != 2) throw std::invalid_argument("embed_legs: rank-2 input required");
  DoubleTensor out(t.group(), rank);
  const DoubleElement one = DoubleElement::unit(t.group());
  for (const auto& term : t.terms()) {
    std::vector<DoubleElement> legs(rank, one);
    legs[p] = term.legs[0];
    legs[q] = term.legs[1];
    out.add(term.coeff, std::move(legs));
  }
  return out;
}

/// All |G|^2 basis elements g h*.
inline std::vector<DoubleElement> double_basis(const GroupPtr& group) {
  std::vector<DoubleElement> out;
  for (Element g : group->elements())
    for (Element h : group->elements()) out.push_back(DoubleElement::basis(group, g, h));
  return out;
}

}  // namespace qdouble
