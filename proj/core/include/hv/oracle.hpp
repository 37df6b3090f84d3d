#pragma once

#include <cstdint>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/rational.hpp"
#include "hv/report.hpp"

namespace hv {

/// Three fixed seeds used when none are given.
std::vector<std::uint64_t> default_seeds();

/// Rational values for e2, ..., en drawn from the seed (numerators and
/// denominators bounded by 10^4). Draws that make a nonzero structure
/// constant (b - a or b - lambda*a for a, b in B_radius) vanish are skipped.
/// Empty for rank 1.
std::vector<Rational> specialization(const AlgebraContext& ctx, std::uint64_t seed, int radius);

struct DimRun {
  int radius = 0;
  std::uint64_t seed = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t quotient_dim = 0;
};

struct DimReport {
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t quotient_dim = 0;
  int radius = 0;
  std::vector<std::uint64_t> seeds;
  /// Every solve, radius R and R+1 for each seed (rank 1 has no seed
  /// dependence and is solved once per radius).
  std::vector<DimRun> runs;
  bool stable = false;
};

/// dim H^2 of g (Plain) or g' (DerivedPrime) on the window B_R: antisymmetric
/// unknowns on pairs with degrees and sum in B_R, the cocycle identity on all
/// triples whose degrees and sums stay in B_R, coboundaries of the dual
/// functionals of window keys. Throws UnstableTruncation when the quotient
/// dimension differs between seeds or between R and R+1.
DimReport h2_dimension(const AlgebraContext& ctx, int radius, const std::vector<std::uint64_t>& seeds);

/// Dimension of the space of degree-d derivations of g restricted to the
/// window (unknown images of X_a on X_{a+d}, a and a+d in B_R; Leibniz on all
/// pairs whose degrees, sums and shifts stay in B_R). Reported as both
/// cocycle_dim and quotient_dim; coboundary_dim is 0.
DimReport der_dimension(const AlgebraContext& ctx, const GroupElem& degree, int radius,
                        const std::vector<std::uint64_t>& seeds);

/// Every builtin cocycle of the extension solves the window system, and the
/// builtins are independent modulo coboundaries.
CheckReport h2_builtin_check(const AlgebraContext& ctx, int radius, std::uint64_t seed);

/// Every classified derivation of the given degree solves the window system
/// and together they span its solution space.
CheckReport der_family_check(const AlgebraContext& ctx, const GroupElem& degree, int radius, std::uint64_t seed);

}  // namespace hv
