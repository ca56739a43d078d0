#include <random>

#include <gtest/gtest.h>

#include "qdouble/laurent.hpp"
#include "qdouble/scalars.hpp"

using namespace qdouble;

namespace {

Laurent1 random_laurent1(std::mt19937& rng, int max_terms = 8) {
  std::uniform_int_distribution<int> nterms(1, max_terms), expo(-4, 4);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  Laurent1::Terms t;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) t[{expo(rng)}] += Scalar{coef(rng), coef(rng)};
  return Laurent1({"x"}, std::move(t));
}

double dist(const Laurent1& a, const Laurent1& b) { return (a - b).max_abs_coeff(); }

}  // namespace

TEST(RootOfUnity, AxisValuesAreExact) {
  EXPECT_EQ(root_of_unity(4, 1), Scalar(0.0, 1.0));
  EXPECT_EQ(root_of_unity(6, 3), Scalar(-1.0, 0.0));
  EXPECT_EQ(root_of_unity(5, -5), Scalar(1.0, 0.0));
}

TEST(RootOfUnity, CubeRoot) {
  const Scalar w = root_of_unity(3, 1);
  EXPECT_NEAR(w.real(), -0.5, 1e-12);
  EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2.0, 1e-12);
}

TEST(RootOfUnity, RejectsZeroOrder) { EXPECT_THROW(root_of_unity(0, 1), std::invalid_argument); }

TEST(RootOfUnity, PowersCloseUp) {
  for (int n = 1; n <= 24; ++n)
    for (int k = -n; k <= 2 * n; ++k) EXPECT_LT(std::abs(std::pow(root_of_unity(n, k), n) - 1.0), 1e-9) << n << " " << k;
}

TEST(Tolerances, MustBePositive) {
  EXPECT_NO_THROW(Tolerances(1e-9, 1e-6));
  EXPECT_THROW(Tolerances(0.0, 1e-6), std::invalid_argument);
  EXPECT_THROW(Tolerances(1e-9, -1.0), std::invalid_argument);
}

TEST(Laurent, Products) {
  const Laurent1 x = lx();
  const Laurent1 one = lx(1.0, 0);
  EXPECT_EQ((x - one) * (x + one), laurent1({{2, 1.0}, {0, -1.0}}));
  EXPECT_EQ(x * lx(1.0, -1), one);

  const Laurent2 a = lift(laurent1({{0, 1.0}, {1, 1.0}}), Lift::First);
  const Laurent2 b = lift(laurent1({{0, 1.0}, {1, 1.0}}), Lift::Second);
  Laurent2::Terms expect{{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.0}};
  EXPECT_EQ(a * b, Laurent2({"x", "z"}, expect));
}

TEST(Laurent, MismatchedVariablesThrow) {
  EXPECT_THROW(lx(1.0, 1, "x") * lx(1.0, 1, "y"), std::invalid_argument);
  EXPECT_THROW(lx(1.0, 1, "x") + lx(1.0, 1, "y"), std::invalid_argument);
}

TEST(Laurent, NormalizationDropsTinyCoefficients) {
  const Laurent1 p = laurent1({{0, 1.0}, {3, 1e-12}});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE((lx() - lx()).is_zero());
}

TEST(Laurent, NonFiniteRejected) {
  EXPECT_THROW(laurent1({{0, Scalar(std::nan(""), 0.0)}}), std::domain_error);
}

TEST(Laurent, Evaluation) {
  EXPECT_NEAR(std::abs(laurent_eval(laurent1({{2, 1.0}, {1, -1.0}, {0, 1.0}}), 1.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(laurent_eval(laurent1({{-1, 1.0}, {1, -1.0}}), 1.0)), 0.0, 1e-15);
  EXPECT_EQ(laurent_eval(lx(1.0, 0), Scalar(3.0, 7.0)), Scalar(1.0));
  EXPECT_THROW(laurent_eval(lx(1.0, -1), 0.0), std::invalid_argument);
  EXPECT_EQ(laurent_eval(lx(2.0, 3), 0.0), Scalar(0.0));
}

TEST(Laurent, Derivative) {
  EXPECT_EQ(laurent_derivative(lx(1.0, 2)), lx(2.0, 1));
  EXPECT_EQ(laurent_derivative(lx(1.0, -1)), lx(-1.0, -2));
  // i (x - 1 + 1/x) -> i (1 - x^-2), zero at x = 1
  const Laurent1 p = kI * lx(1.0, -1) * laurent1({{2, 1.0}, {1, -1.0}, {0, 1.0}});
  const Laurent1 dp = laurent_derivative(p);
  EXPECT_EQ(dp, laurent1({{0, kI}, {-2, -kI}}));
  EXPECT_LT(std::abs(laurent_eval(dp, 1.0)), 1e-15);
}

TEST(Laurent, SubstituteInverse) {
  EXPECT_EQ(substitute_inverse(laurent1({{2, 1.0}, {0, -1.0}})), laurent1({{-2, 1.0}, {0, -1.0}}));
  EXPECT_EQ(substitute_inverse(lx()), lx(1.0, -1));
  EXPECT_EQ(substitute_inverse(laurent1({{2, 1.0}, {1, -1.0}, {0, 1.0}})),
            laurent1({{-2, 1.0}, {-1, -1.0}, {0, 1.0}}));
}

TEST(LaurentProperty, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const Laurent1 p = random_laurent1(rng), q = random_laurent1(rng), r = random_laurent1(rng);
    EXPECT_LE(dist(p * q, q * p), 1e-9);
    EXPECT_LE(dist((p * q) * r, p * (q * r)), 1e-9);
  }
}

TEST(LaurentProperty, EvaluationIsMultiplicative) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mag(0.3, 1.7), ang(0.0, 6.283185307179586);
  for (int trial = 0; trial < 20; ++trial) {
    const Laurent1 p = random_laurent1(rng), q = random_laurent1(rng);
    for (int k = 0; k < 20; ++k) {
      const Scalar x0 = std::polar(mag(rng), ang(rng));
      const Scalar lhs = laurent_eval(p * q, x0);
      const Scalar rhs = laurent_eval(p, x0) * laurent_eval(q, x0);
      EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(PolyMatrix, ProductAndIdentity) {
  LaurentMatrix m(2, 2, Laurent1({"x"}));
  m(0, 0) = lx();
  m(0, 1) = lx(1.0, 0);
  m(1, 1) = lx(1.0, -1);
  const auto id = LaurentMatrix::identity(2, Laurent1({"x"}));
  EXPECT_TRUE((m * id - m).is_zero());
  const auto sq = m * m;
  EXPECT_EQ(sq(0, 0), lx(1.0, 2));
  EXPECT_EQ(sq(0, 1), laurent1({{1, 1.0}, {-1, 1.0}}));
  EXPECT_EQ(sq.nonzero_count(), 3u);
  LaurentMatrix bad(3, 1, Laurent1({"x"}));
  EXPECT_THROW(m * bad, std::invalid_argument);
}

TEST(RoundSig12, TwelveDigits) {
  EXPECT_DOUBLE_EQ(round_sig12(0.1234567890123456), 0.123456789012);
  EXPECT_EQ(round_sig12(-0.0), 0.0);
}
