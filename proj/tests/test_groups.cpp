#include <set>

#include <gtest/gtest.h>

#include "qdouble/groups.hpp"

using namespace qdouble;

namespace {

std::vector<GroupPtr> all_groups() {
  std::vector<GroupPtr> gs;
  for (int n = 3; n <= 8; ++n) gs.push_back(dihedral(n));
  gs.push_back(alternating4());
  gs.push_back(symmetric(4));
  return gs;
}

}  // namespace

TEST(Dihedral, Relations) {
  for (int n = 3; n <= 8; ++n) {
    auto g = dihedral(n);
    const Element s = g->dihedral(1, 0), t = g->dihedral(0, 1);
    EXPECT_EQ(g->order(), 2 * n);
    EXPECT_EQ(g->mul(t, s), g->dihedral(n - 1, 1));
    EXPECT_EQ(g->mul(s, g->power(s, n - 1)), g->identity());
    EXPECT_EQ(g->element_order(s), n);
    EXPECT_EQ(g->element_order(t), 2);
  }
  auto d3 = dihedral(3);
  EXPECT_EQ(d3->mul(d3->dihedral(0, 1), d3->dihedral(1, 0)), d3->dihedral(2, 1));
  EXPECT_EQ(d3->label(d3->dihedral(2, 1)), "s^2 t");
  EXPECT_THROW(dihedral(2), std::invalid_argument);
}

TEST(Groups, AssociativeWithInverses) {
  for (const auto& g : all_groups()) {
    for (Element a : g->elements()) {
      EXPECT_EQ(g->mul(a, g->inv(a)), g->identity());
      EXPECT_EQ(g->mul(g->identity(), a), a);
      for (Element b : g->elements())
        for (Element c : g->elements()) ASSERT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c))) << g->name();
    }
  }
}

TEST(Permutations, CompositionIsRightToLeft) {
  auto s3 = symmetric(3);
  EXPECT_EQ(s3->label(s3->mul(s3->find("(12)"), s3->find("(13)"))), "(132)");
  EXPECT_EQ(alternating4()->order(), 12);
  EXPECT_EQ(symmetric(4)->order(), 24);
  EXPECT_EQ(symmetric(2)->order(), 2);
  EXPECT_THROW(symmetric(1), std::invalid_argument);
  EXPECT_THROW(symmetric(7), std::invalid_argument);
  EXPECT_EQ(cyclic(5)->order(), 5);
  EXPECT_THROW(cyclic(0), std::invalid_argument);
}

TEST(GroupSpec, Parses) {
  EXPECT_EQ(parse_group_spec("dihedral:6")->order(), 12);
  EXPECT_EQ(parse_group_spec("alternating:4")->order(), 12);
  EXPECT_EQ(parse_group_spec("cyclic:1")->order(), 1);
  EXPECT_THROW(parse_group_spec("dihedral"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("dihedral:x"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("alternating:5"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("klein:4"), std::invalid_argument);
}

TEST(Conjugacy, ClassCounts) {
  EXPECT_EQ(conjugacy_classes(*dihedral(5)).classes.size(), 4u);
  EXPECT_EQ(conjugacy_classes(*dihedral(6)).classes.size(), 6u);
  EXPECT_EQ(conjugacy_classes(*alternating4()).classes.size(), 4u);
  EXPECT_EQ(conjugacy_classes(*symmetric(4)).classes.size(), 5u);
  auto a4 = alternating4();
  const auto data = conjugacy_data(*a4);
  const auto& c = data.by_label("(12)(34)");
  std::set<std::string> labels;
  for (Element s : c.elements) labels.insert(a4->label(s));
  EXPECT_EQ(labels, (std::set<std::string>{"(12)(34)", "(13)(24)", "(14)(23)"}));
}

TEST(Conjugacy, DihedralClassOrder) {
  std::vector<std::string> labels;
  for (const auto& c : conjugacy_classes(*dihedral(6)).classes) labels.push_back(c.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"e", "s3", "s1", "s2", "s2t", "s2t1"}));
  labels.clear();
  for (const auto& c : conjugacy_classes(*dihedral(5)).classes) labels.push_back(c.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"e", "s1", "s2", "st"}));
}

TEST(Centralizer, KnownCases) {
  auto d6 = dihedral(6);
  const auto zt = centralizer(*d6, d6->dihedral(0, 1));
  const std::set<Element> z(zt.begin(), zt.end());
  EXPECT_EQ(z, (std::set<Element>{d6->identity(), d6->dihedral(0, 1), d6->dihedral(3, 0), d6->dihedral(3, 1)}));
  EXPECT_EQ(centralizer(*d6, d6->identity()).size(), 12u);
  auto s4 = symmetric(4);
  EXPECT_EQ(centralizer(*s4, s4->find("(12)(34)")).size(), 8u);
}

TEST(Transversal, FixedChoices) {
  for (int n : {4, 6, 8}) {
    auto g = dihedral(n);
    const auto data = conjugacy_data(*g);
    const auto& cls = data.by_label("s2t");
    for (int i = 0; i < n / 2; ++i) EXPECT_EQ(cls.transversal.at(g->dihedral(2 * i, 1)), g->dihedral(i, 0));
  }
  for (int n : {3, 5, 7}) {
    auto g = dihedral(n);
    const auto data = conjugacy_data(*g);
    const auto& cls = data.by_label("st");
    for (int i = 0; i < n; ++i) EXPECT_EQ(cls.transversal.at(g->dihedral(i, 1)), g->dihedral((n + 1) / 2 * i, 0));
  }
  auto a4 = alternating4();
  const auto da = conjugacy_data(*a4);
  const auto& ca = da.by_label("(12)(34)");
  EXPECT_EQ(ca.transversal.at(a4->find("(13)(24)")), a4->find("(132)"));
  EXPECT_EQ(ca.transversal.at(a4->find("(14)(23)")), a4->find("(123)"));
  auto s4 = symmetric(4);
  const auto ds = conjugacy_data(*s4);
  const auto& cs = ds.by_label("(12)(34)");
  EXPECT_EQ(cs.transversal.at(s4->find("(13)(24)")), s4->find("(14)"));
  EXPECT_EQ(cs.transversal.at(s4->find("(14)(23)")), s4->find("(13)"));
}

TEST(Transversal, RejectsForeignRepresentative) {
  auto g = dihedral(4);
  const auto data = conjugacy_data(*g);
  const auto& cls = data.by_label("s2t");
  EXPECT_THROW(transversal(*g, cls.elements, g->dihedral(1, 0)), std::invalid_argument);
}

TEST(ConjugacyProperty, ClassEquationAndTransversals) {
  for (const auto& gp : all_groups()) {
    const FiniteGroup& g = *gp;
    const auto data = conjugacy_data(g);
    std::size_t total = 0;
    std::vector<int> hits(g.order(), 0);
    for (const auto& c : data.classes) {
      total += c.elements.size();
      EXPECT_EQ(c.elements.size() * c.centralizer.size(), static_cast<std::size_t>(g.order()));
      EXPECT_EQ(c.transversal.at(c.rep), g.identity());
      for (Element s : c.elements) {
        ++hits[s.index];
        EXPECT_EQ(g.conj(c.transversal.at(s), c.rep), s);
        for (Element h : g.elements()) EXPECT_TRUE(c.contains(g.conj(h, s)));
      }
      // G is the disjoint union of the cosets alpha_s Z_k.
      std::vector<int> cover(g.order(), 0);
      for (Element s : c.elements)
        for (Element z : c.centralizer) ++cover[g.mul(c.transversal.at(s), z).index];
      for (int v : cover) EXPECT_EQ(v, 1) << g.name() << " " << c.label;
      // alpha_t^-1 g alpha_s lies in Z_k with t = g s g^-1.
      for (Element x : g.elements())
        for (Element s : c.elements) {
          const Element t = g.conj(x, s);
          const Element z = g.mul(g.mul(g.inv(c.transversal.at(t)), x), c.transversal.at(s));
          EXPECT_NE(std::find(c.centralizer.begin(), c.centralizer.end(), z), c.centralizer.end());
        }
    }
    EXPECT_EQ(total, static_cast<std::size_t>(g.order()));
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}
