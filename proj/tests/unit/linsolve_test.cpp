#include <gtest/gtest.h>

#include "hv/errors.hpp"
#include "hv/linsolve.hpp"

namespace hv {
namespace {

TEST(LinearSolve, OneEquation) {
  LinearSystem sys(2);
  sys.add_equation({{0, Rational(1)}, {1, Rational(1)}});
  const auto basis = solve_nullspace(sys);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0][0] + basis[0][1], 0);
}

TEST(LinearSolve, EmptySystem) {
  EXPECT_EQ(solve_nullspace(LinearSystem(5)).size(), 5u);
}

TEST(LinearSolve, DuplicatesDoNotChangeRank) {
  LinearSystem sys(4);
  const std::map<std::uint32_t, Rational> r1{{0, Rational(1, 2)}, {2, Rational(-3)}};
  const std::map<std::uint32_t, Rational> r2{{1, Rational(2)}, {3, Rational(7, 5)}};
  sys.add_equation(r1);
  sys.add_equation(r2);
  const std::size_t before = solve_nullspace(sys).size();
  sys.add_equation(r1);
  sys.add_equation(r2);
  sys.add_equation({{0, Rational(1)}, {1, Rational(4)}, {2, Rational(-6)}, {3, Rational(14, 5)}});
  EXPECT_EQ(solve_nullspace(sys).size(), before);
  EXPECT_EQ(before, 2u);
}

TEST(LinearSolve, NullspaceVectorsSolveSystem) {
  LinearSystem sys(5);
  sys.add_equation({{0, Rational(3)}, {1, Rational(-1, 2)}, {4, Rational(2)}});
  sys.add_equation({{1, Rational(1)}, {2, Rational(5)}});
  sys.add_equation({{2, Rational(2, 3)}, {3, Rational(1)}, {4, Rational(-1)}});
  const Echelon e = echelon(sys);
  EXPECT_EQ(e.rank(), 3u);
  const auto basis = e.nullspace();
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) EXPECT_TRUE(e.annihilates(v));
}

TEST(LinearSolve, PrimitiveRows) {
  const SparseRow r = primitive_row({{1, Rational(-2, 3)}, {4, Rational(4, 9)}, {6, Rational(0)}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (std::pair<std::uint32_t, Integer>{1, Integer(3)}));
  EXPECT_EQ(r[1], (std::pair<std::uint32_t, Integer>{4, Integer(-2)}));
  EXPECT_TRUE(primitive_row({{2, Rational(0)}}).empty());
}

TEST(LinearSolve, ReduceDetectsRowSpace) {
  Echelon e(3);
  EXPECT_TRUE(e.insert(std::map<std::uint32_t, Rational>{{0, Rational(1)}, {1, Rational(1)}}));
  EXPECT_TRUE(e.insert(std::map<std::uint32_t, Rational>{{1, Rational(1)}, {2, Rational(1)}}));
  EXPECT_FALSE(e.insert(std::map<std::uint32_t, Rational>{{0, Rational(2)}, {2, Rational(-2)}}));
  EXPECT_TRUE(e.reduce(primitive_row({{0, Rational(1)}, {2, Rational(-1)}})).empty());
  EXPECT_FALSE(e.reduce(primitive_row({{2, Rational(1)}})).empty());
}

TEST(LinearSolve, RejectsUndeclaredVariable) {
  LinearSystem sys(2);
  try {
    sys.add_equation({{2, Rational(1)}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidParams);
  }
}

}  // namespace
}  // namespace hv
