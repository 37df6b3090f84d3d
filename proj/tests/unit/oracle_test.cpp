#include <gtest/gtest.h>

#include "hv/errors.hpp"
#include "hv/oracle.hpp"

namespace hv {
namespace {

std::size_t h2(const AlgebraContext& ctx, int radius) {
  const DimReport r = h2_dimension(ctx, radius, default_seeds());
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.quotient_dim, r.cocycle_dim - r.coboundary_dim);
  return r.quotient_dim;
}

std::size_t der(const AlgebraContext& ctx, const GroupElem& d, int radius) {
  const DimReport r = der_dimension(ctx, d, radius, default_seeds());
  EXPECT_TRUE(r.stable);
  return r.quotient_dim;
}

TEST(Oracle, SecondCohomologyRankOne) {
  EXPECT_EQ(h2(AlgebraContext(1, Rational(5, 7)), 5), 1u);
  EXPECT_EQ(h2(AlgebraContext(1, 0), 5), 3u);
  EXPECT_EQ(h2(AlgebraContext(1, 1), 5), 2u);
  EXPECT_EQ(h2(AlgebraContext(1, -2), 5), 1u);
  EXPECT_EQ(h2(AlgebraContext(1, -1, Variant::DerivedPrime), 5), 4u);
}

TEST(Oracle, SecondCohomologyRankTwo) { EXPECT_EQ(h2(AlgebraContext(2, -2), 3), 2u); }

TEST(Oracle, DerivationDimensionsRankOne) {
  const GroupElem zero{0};
  EXPECT_EQ(der(AlgebraContext(1, Rational(5, 7)), zero, 5), 3u);
  EXPECT_EQ(der(AlgebraContext(1, 0), zero, 5), 4u);
  EXPECT_EQ(der(AlgebraContext(1, 1), zero, 5), 3u);
  EXPECT_EQ(der(AlgebraContext(1, -1), zero, 5), 4u);
  EXPECT_EQ(der(AlgebraContext(1, -2), zero, 5), 4u);
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-2), Rational(5, 7)})
    EXPECT_EQ(der(AlgebraContext(1, lambda), GroupElem{2}, 5), 2u);
}

TEST(Oracle, BuiltinsAndFamiliesAreMembers) {
  for (const auto& ctx : {AlgebraContext(1, 0), AlgebraContext(1, 1), AlgebraContext(1, -2),
                          AlgebraContext(1, -1, Variant::DerivedPrime), AlgebraContext(2, -2)})
    EXPECT_TRUE(h2_builtin_check(ctx, ctx.rank() == 1 ? 4 : 3, 11).passed());
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-1), Rational(-2), Rational(5, 7)})
    EXPECT_TRUE(der_family_check(AlgebraContext(1, lambda), GroupElem{0}, 4, 11).passed());
  EXPECT_TRUE(der_family_check(AlgebraContext(1, 0), GroupElem{3}, 4, 11).passed());
}

TEST(Oracle, SpecializationIsDeterministic) {
  const AlgebraContext ctx(3, 0);
  EXPECT_EQ(specialization(ctx, 11, 3), specialization(ctx, 11, 3));
  EXPECT_NE(specialization(ctx, 11, 3), specialization(ctx, 23, 3));
  EXPECT_EQ(specialization(ctx, 11, 3).size(), 2u);
  EXPECT_TRUE(specialization(AlgebraContext(1, 0), 11, 3).empty());
  EXPECT_GE(default_seeds().size(), 3u);
}

TEST(Oracle, Preconditions) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::SyntaxError;
  };
  EXPECT_EQ(kind([] { (void)h2_dimension(AlgebraContext(1, 0, Variant::Extended), 5, {11}); }),
            ErrorKind::VariantMismatch);
  EXPECT_EQ(kind([] { (void)h2_dimension(AlgebraContext(1, 0), 2, {11}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind([] { (void)der_dimension(AlgebraContext(1, -1, Variant::DerivedPrime), GroupElem{0}, 5, {11}); }),
            ErrorKind::VariantMismatch);
}

}  // namespace
}  // namespace hv
