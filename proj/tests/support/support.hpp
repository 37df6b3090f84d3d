#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/automorphisms.hpp"
#include "hv/cocycles.hpp"
#include "hv/derivations.hpp"
#include "hv/scalar.hpp"

namespace hv::test {

using Rng = std::mt19937_64;

/// p/q with |p| <= bound, 1 <= q <= bound.
Rational random_rational(Rng& rng, int bound = 9);
Rational random_nonzero_rational(Rng& rng, int bound = 9);

/// Random rational function of low degree in e2, ..., e_rank (a rational
/// when rank = 1).
Scalar random_scalar(Rng& rng, std::size_t rank);
Scalar random_nonzero_scalar(Rng& rng, std::size_t rank);

/// A few noncentral window keys with random coefficients.
Element random_element(Rng& rng, const AlgebraContext& ctx, int radius, int terms = 3);

/// Functional with random values on a random subset of window keys.
LinearFunctional random_functional(Rng& rng, const AlgebraContext& ctx, int radius);

/// Parameters obeying the lambda gating: xi = +-1 (M = +-Id), random
/// character, l != 0 and only the slots allowed at lambda (f and l1 = 0 at
/// lambda = 1). With `liftable`, l2 stays 0. Scalar slots are rational when
/// `rational_only`.
AutParams random_aut_params(Rng& rng, const AlgebraContext& ctx, bool liftable = false, bool rational_only = true);

/// Element supported on I-keys of the window.
InnerAut random_inner(Rng& rng, const AlgebraContext& ctx, int radius);

/// Central images of the lift of theta, recomputed from the bracket of the
/// extension: every degree-0 key and every central generator is expressed as
/// a bracket of window keys and theta-bar is forced by the homomorphism
/// property. Keys: L(0), I(0) and central_keys(ctx).
Element lift_image_from_brackets(const AlgebraContext& ext, const AutParams& p, const BasisKey& k);

/// Returns the same map with one basis image perturbed.
BasisMap corrupted(BasisMap m, const BasisKey& target, const Element& extra);

}  // namespace hv::test

namespace hv::test {

/// Every descriptor family allowed in ctx with random parameters: the plain
/// families on g, or the lifted ones on the extension.
std::vector<DerivationDescriptor> gated_descriptors(Rng& rng, const AlgebraContext& ctx);

}  // namespace hv::test
