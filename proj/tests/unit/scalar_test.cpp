#include <gtest/gtest.h>

#include <vector>

#include "hv/errors.hpp"
#include "hv/parse.hpp"
#include "hv/scalar.hpp"
#include "support.hpp"

namespace hv {
namespace {

const Scalar e2 = Scalar::indeterminate(2);
const Scalar e3 = Scalar::indeterminate(3);

TEST(Scalar, Cancellation) { EXPECT_EQ(e2 + (Scalar(1L) - e2), Scalar(1L)); }

TEST(Scalar, InverseTimesSelf) { EXPECT_EQ((Scalar(1L) / e2) * e2, Scalar(1L)); }

TEST(Scalar, ExactPolynomialDivision) {
  EXPECT_EQ((e2 * e2 - Scalar(1L)) / (e2 - Scalar(1L)), e2 + Scalar(1L));
}

TEST(Scalar, DivisionByZeroThrows) {
  try {
    (void)(e2 / Scalar());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Scalar, SpecializeSubstitutes) {
  const std::vector<Rational> at{Rational(3, 2)};
  EXPECT_EQ((e2 + Scalar(1L)).specialize(at), Rational(5, 2));
}

TEST(Scalar, SpecializeAtPoleThrows) {
  const std::vector<Rational> at{Rational(0)};
  try {
    (void)(Scalar(1L) / e2).specialize(at);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::SpecializationPole);
  }
}

TEST(Scalar, SpecializeConstant) { EXPECT_EQ(Scalar(7L).specialize({}), Rational(7)); }

TEST(Scalar, CanonicalDenominatorIsMonic) {
  const Scalar s = Scalar(1L) / (Scalar(2L) * e2 + Scalar(4L));
  EXPECT_EQ(s, Scalar(Rational(1, 2)) / (e2 + Scalar(2L)));
  EXPECT_EQ(to_string(s.denominator()), "e2+2");
}

TEST(Scalar, PowersAndInverse) {
  EXPECT_EQ(e2.pow(3), e2 * e2 * e2);
  EXPECT_EQ(e2.pow(-2) * e2.pow(2), Scalar(1L));
  EXPECT_EQ(Scalar(Rational(2, 3)).inverse(), Scalar(Rational(3, 2)));
}

TEST(Scalar, RandomFieldAxioms) {
  test::Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar x = test::random_scalar(rng, 3);
    const Scalar y = test::random_scalar(rng, 3);
    const Scalar z = test::random_scalar(rng, 3);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x - x, Scalar());
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), Scalar(1L));
  }
}

TEST(Scalar, SpecializeIsRingHomomorphism) {
  test::Rng rng(2);
  const std::vector<Rational> at{Rational(7, 3), Rational(-5, 11)};
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar x = test::random_scalar(rng, 3);
    const Scalar y = test::random_scalar(rng, 3);
    try {
      EXPECT_EQ((x * y).specialize(at), x.specialize(at) * y.specialize(at));
      EXPECT_EQ((x + y).specialize(at), x.specialize(at) + y.specialize(at));
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::SpecializationPole);
    }
  }
}

TEST(Scalar, CanonicalFormIsIdempotent) {
  test::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar x = test::random_scalar(rng, 3);
    const Scalar again = Scalar::fraction(x.numerator(), x.denominator());
    EXPECT_EQ(again, x);
    EXPECT_EQ(again.numerator(), x.numerator());
    EXPECT_EQ(again.denominator(), x.denominator());
  }
}

TEST(Scalar, PrintParseRoundTrip) {
  test::Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar x = test::random_scalar(rng, 3);
    EXPECT_EQ(parse_scalar(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(to_string(e2 * e2 - Scalar(1L)), "e2^2-1");
}

TEST(Scalar, RationalFunctionsInTwoVariables) {
  const Scalar x = (e2 * e3 - Scalar(1L)) / (e2 + e3);
  const Scalar y = (e2 + e3) / (e2 * e3 - Scalar(1L));
  EXPECT_EQ(x * y, Scalar(1L));
  EXPECT_FALSE(x.is_rational());
  EXPECT_EQ(x.span(), 2u);
}

}  // namespace
}  // namespace hv
