#include <random>

#include <gtest/gtest.h>

#include "qdouble/doubles.hpp"

using namespace qdouble;

namespace {

constexpr double kTol = 1e-9;

DoubleElement random_element(const GroupPtr& g, std::mt19937& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  DoubleElement::Terms t;
  for (Element a : g->elements())
    for (Element b : g->elements())
      if (c(rng) > 0.3) t[{a, b}] = Scalar{c(rng), c(rng)};
  return DoubleElement(g, std::move(t));
}

DoubleTensor unit_tensor(const GroupPtr& g, int rank) {
  DoubleTensor t(g, rank);
  t.add(1.0, std::vector<DoubleElement>(rank, DoubleElement::unit(g)));
  return t;
}

}  // namespace

TEST(Double, DualElementsAreOrthogonalIdempotents) {
  auto g = dihedral(3);
  for (Element a : g->elements())
    for (Element b : g->elements()) {
      const DoubleElement prod = DoubleElement::dual(g, a) * DoubleElement::dual(g, b);
      const DoubleElement expect = a == b ? DoubleElement::dual(g, b) : DoubleElement(g);
      EXPECT_LE(prod.distance(expect), kTol);
    }
}

TEST(Double, GroupEmbeddingIsMultiplicative) {
  auto g = dihedral(4);
  const auto one = DoubleElement::unit(g);
  for (Element a : g->elements()) {
    const auto ea = DoubleElement::group_element(g, a);
    EXPECT_LE((one * ea).distance(ea), kTol);
    EXPECT_LE((ea * one).distance(ea), kTol);
    for (Element b : g->elements())
      EXPECT_LE((ea * DoubleElement::group_element(g, b)).distance(DoubleElement::group_element(g, g->mul(a, b))), kTol);
  }
}

TEST(Double, CommutationRuleInD3) {
  auto g = dihedral(3);
  const Element s = g->dihedral(1, 0), t = g->dihedral(0, 1);
  const DoubleElement lhs = DoubleElement::dual(g, t) * DoubleElement::group_element(g, s);
  EXPECT_LE(lhs.distance(DoubleElement::basis(g, s, g->dihedral(1, 1))), kTol);
}

TEST(Double, GroupMismatchThrows) {
  const auto a = DoubleElement::unit(dihedral(3));
  const auto b = DoubleElement::unit(dihedral(4));
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(Double, TrivialGroup) {
  auto z1 = cyclic(1);
  const auto e = DoubleElement::unit(z1);
  const DoubleTensor d = coproduct(e);
  DoubleTensor expect(z1, 2);
  expect.add(1.0, {e, e});
  EXPECT_LE(d.distance(expect), kTol);
  EXPECT_EQ(universal_r(z1).terms().size(), 1u);
  EXPECT_LE(universal_r(z1).distance(expect), kTol);
}

TEST(Double, GroupLikeCoproduct) {
  auto g = dihedral(3);
  for (Element a : g->elements()) {
    const auto ea = DoubleElement::group_element(g, a);
    DoubleTensor expect(g, 2);
    expect.add(1.0, {ea, ea});
    EXPECT_LE(coproduct(ea).distance(expect), kTol);
  }
}

TEST(Double, CounitAndAntipodeValues) {
  auto g = dihedral(3);
  for (Element a : g->elements())
    for (Element h : g->elements())
      EXPECT_EQ(counit(DoubleElement::basis(g, a, h)), Scalar(h == g->identity() ? 1.0 : 0.0));
  const auto one = DoubleElement::unit(g);
  EXPECT_LE(antipode(one).distance(one), kTol);
}

TEST(Double, CounitOnRandomElements) {
  auto g = dihedral(3);
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_element(g, rng);
    EXPECT_LE(to_element(counit_on_leg(coproduct(a), 0)).distance(a), kTol);
    EXPECT_LE(to_element(counit_on_leg(coproduct(a), 1)).distance(a), kTol);
  }
}

class HopfAxioms : public ::testing::TestWithParam<int> {};

TEST_P(HopfAxioms, HoldOnEveryBasisElement) {
  auto g = dihedral(GetParam());
  const auto one = DoubleElement::unit(g);
  for (const auto& a : double_basis(g)) {
    const DoubleTensor d = coproduct(a);
    EXPECT_LE(coproduct_on_leg(d, 0).distance(coproduct_on_leg(d, 1)), kTol);
    EXPECT_LE(to_element(counit_on_leg(d, 0)).distance(a), kTol);
    EXPECT_LE(to_element(counit_on_leg(d, 1)).distance(a), kTol);
    EXPECT_LE(multiply_legs(antipode_on_leg(d, 0)).distance(counit(a) * one), kTol);
    EXPECT_LE(multiply_legs(antipode_on_leg(d, 1)).distance(counit(a) * one), kTol);
  }
  // Delta is an algebra map on products of basis elements.
  const auto basis = double_basis(g);
  for (std::size_t i = 0; i < basis.size(); i += 5)
    for (std::size_t j = 0; j < basis.size(); j += 7)
      EXPECT_LE(coproduct(basis[i] * basis[j]).distance(coproduct(basis[i]) * coproduct(basis[j])), kTol);
}

INSTANTIATE_TEST_SUITE_P(Dihedral, HopfAxioms, ::testing::Values(3, 4));

TEST(QuasiTriangular, SymbolicRelationsInD3) {
  auto g = dihedral(3);
  const DoubleTensor r = universal_r(g);
  EXPECT_EQ(r.terms().size(), 6u);
  for (const auto& a : double_basis(g)) EXPECT_LE((r * coproduct(a)).distance(opposite_coproduct(a) * r), kTol);

  const DoubleTensor r12 = embed_legs(r, 3, 0, 1), r13 = embed_legs(r, 3, 0, 2), r23 = embed_legs(r, 3, 1, 2);
  EXPECT_LE(coproduct_on_leg(r, 0).distance(r13 * r23), kTol);
  EXPECT_LE(coproduct_on_leg(r, 1).distance(r13 * r12), kTol);
  EXPECT_LE((r12 * r13 * r23).distance(r23 * r13 * r12), kTol);
  // R is invertible with inverse (S (x) id) R.
  EXPECT_LE((r * antipode_on_leg(r, 0)).distance(unit_tensor(g, 2)), kTol);
}

TEST(QuasiTriangular, WrongCoproductBreaksQt1) {
  // Negative control: pairing g (k h^-1)* with g k* instead.
  auto g = dihedral(3);
  const DoubleTensor r = universal_r(g);
  double worst = 0.0;
  for (const auto& a : double_basis(g)) {
    DoubleTensor bad(g, 2);
    for (const auto& [p, c] : a.terms())
      for (Element k : g->elements())
        bad.add(c, {DoubleElement::basis(g, p.g, k), DoubleElement::basis(g, p.g, g->mul(k, g->inv(p.h)))});
    worst = std::max(worst, (r * bad).distance(permute_legs(bad, {1, 0}) * r));
  }
  EXPECT_GT(worst, 0.5);
}

TEST(IteratedCoproduct, DualElementProjectsOnProducts) {
  auto g = dihedral(3);
  const Element h = g->dihedral(1, 1);
  const auto t = iterated_coproduct(DoubleElement::dual(g, h), 3).expand();
  for (const auto& [key, c] : t) {
    EXPECT_EQ(g->mul(g->mul(key[2].h, key[1].h), key[0].h), h);
    EXPECT_LE(std::abs(c - 1.0), kTol);
  }
  EXPECT_EQ(t.size(), 36u);
}
