#include <gtest/gtest.h>

#include "hv/algebra.hpp"
#include "hv/errors.hpp"
#include "support.hpp"

namespace hv {
namespace {

using K = BasisKey;
GroupElem g(int a) { return GroupElem{a}; }

TEST(Algebra, LLBracket) {
  for (const Rational lambda : {Rational(0), Rational(3), Rational(-1, 2)})
    EXPECT_EQ(bracket(AlgebraContext(1, lambda), K::L(g(1)), K::L(g(2))), Element(K::L(g(3))));
}

TEST(Algebra, LIBracketTwisted) {
  EXPECT_EQ(bracket(AlgebraContext(1, -2), K::L(g(1)), K::I(g(1))), Element(K::I(g(2)), Scalar(3L)));
}

TEST(Algebra, VirasoroCharge) {
  const AlgebraContext ctx(1, Rational(5, 7), Variant::Extended);
  Element want(K::L(g(0)), Scalar(-4L));
  want.add(K::CL(), Scalar(Rational(1, 2)));
  EXPECT_EQ(bracket(ctx, K::L(g(2)), K::L(g(-2))), want);
}

TEST(Algebra, MixedChargeAtZero) {
  const AlgebraContext ctx(1, 0, Variant::Extended);
  Element want(K::I(g(0)), Scalar(-1L));
  want.add(K::CLI(0), Scalar(2L));
  EXPECT_EQ(bracket(ctx, K::L(g(1)), K::I(g(-1))), want);
  EXPECT_EQ(to_string(want), "-1*I[0] + 2*CLI0");
  EXPECT_EQ(bracket(ctx, K::I(g(1)), K::I(g(-1))), Element(K::CI()));
}

TEST(Algebra, DerivedPrimeCharge) {
  const AlgebraContext ctx(1, -1, Variant::DerivedPrime);
  EXPECT_EQ(bracket(ctx, K::I(g(2)), K::I(g(-2))), Element(K::CI(), Scalar(Rational(1, 2))));
}

TEST(Algebra, SelfBracketVanishes) {
  test::Rng rng(5);
  for (const auto& ctx : {AlgebraContext(1, 0, Variant::Extended), AlgebraContext(2, -2, Variant::Extended),
                          AlgebraContext(1, -1, Variant::DerivedPrime), AlgebraContext(2, Rational(1, 3))}) {
    const Element x = test::random_element(rng, ctx, 2, 4);
    EXPECT_TRUE(bracket(ctx, x, x).is_zero());
  }
}

TEST(Algebra, JacobiPasses) {
  EXPECT_TRUE(jacobi_check(AlgebraContext(1, 0, Variant::Extended), 3).passed());
  EXPECT_TRUE(jacobi_check(AlgebraContext(2, -2, Variant::Extended), 2).passed());
  EXPECT_TRUE(jacobi_check(AlgebraContext(1, -1, Variant::DerivedPrime), 3).passed());
  EXPECT_TRUE(jacobi_check(AlgebraContext(1, Rational(-1, 2)), 3).passed());
}

TEST(Algebra, Bilinearity) {
  test::Rng rng(6);
  for (const auto& ctx : {AlgebraContext(1, 1, Variant::Extended), AlgebraContext(2, 0, Variant::Extended)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = test::random_element(rng, ctx, 2);
      const Element y = test::random_element(rng, ctx, 2);
      const Element z = test::random_element(rng, ctx, 2);
      const Scalar a = test::random_scalar(rng, ctx.rank());
      const Scalar b = test::random_scalar(rng, ctx.rank());
      EXPECT_EQ(bracket(ctx, a * x + b * y, z), a * bracket(ctx, x, z) + b * bracket(ctx, y, z));
      EXPECT_EQ(bracket(ctx, z, a * x), a * bracket(ctx, z, x));
    }
  }
}

TEST(Algebra, ISpanIsAbelianUpToCenter) {
  for (const auto& ctx : {AlgebraContext(1, 0), AlgebraContext(1, 0, Variant::Extended)}) {
    for (const auto& a : window(1, 3))
      for (const auto& b : window(1, 3)) {
        const Element r = bracket(ctx, K::I(a), K::I(b));
        for (const auto& [k, c] : r.terms()) EXPECT_TRUE(k.is_central());
        if (ctx.variant() == Variant::Plain) EXPECT_TRUE(r.is_zero());
      }
  }
}

TEST(Algebra, BracketRespectsGrading) {
  const AlgebraContext ctx(2, 1, Variant::Extended);
  const auto keys = window_keys(ctx, 2);
  for (const auto& x : keys)
    for (const auto& y : keys) {
      const Element r = bracket(ctx, x, y);
      for (const auto& [k, c] : r.terms()) {
        if (k.is_central())
          EXPECT_TRUE((x.degree + y.degree).is_zero());
        else
          EXPECT_EQ(k.degree, x.degree + y.degree);
      }
    }
}

TEST(Algebra, CentralKeysAreGated) {
  EXPECT_TRUE(central_keys(AlgebraContext(1, 0)).empty());
  EXPECT_EQ(central_keys(AlgebraContext(1, 0, Variant::Extended)),
            (std::vector<BasisKey>{K::CL(), K::CI(), K::CLI(0)}));
  EXPECT_EQ(central_keys(AlgebraContext(1, 1, Variant::Extended)), (std::vector<BasisKey>{K::CL(), K::CLI(1)}));
  EXPECT_EQ(central_keys(AlgebraContext(3, -2, Variant::Extended)),
            (std::vector<BasisKey>{K::CL(), K::CLI(2), K::CLI(3)}));
  EXPECT_EQ(central_keys(AlgebraContext(1, 2, Variant::Extended)), (std::vector<BasisKey>{K::CL()}));
  EXPECT_EQ(central_keys(AlgebraContext(1, -1, Variant::DerivedPrime)).size(), 4u);
}

TEST(Algebra, InactiveKeysRejected) {
  try {
    validate(AlgebraContext(1, 1, Variant::Extended), K::CI());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InactiveCentralKey);
  }
  try {
    validate(AlgebraContext(1, -1, Variant::DerivedPrime), K::I(g(0)));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::VariantMismatch);
  }
}

}  // namespace
}  // namespace hv
