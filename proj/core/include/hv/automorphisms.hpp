#pragma once

#include <array>
#include <string>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/derivations.hpp"
#include "hv/report.hpp"

namespace hv {

/// Integer n x n matrix, row-major.
using IntMatrix = std::vector<std::vector<long>>;

IntMatrix identity_matrix(std::size_t n);

/// xi in E = {u : uG = G}, carried together with its action on the lattice:
/// row i of M holds the coordinates of xi*eps_i.
class ScaleUnit {
 public:
  /// Throws InvalidParams unless det M = +-1 and u*value(eps_i) equals
  /// sum_j M_ij value(eps_j) for every i.
  ScaleUnit(Scalar u, IntMatrix m);

  static ScaleUnit identity(std::size_t rank);
  /// u = -1, M = -Id.
  static ScaleUnit negation(std::size_t rank);

  const Scalar& u() const { return u_; }
  const IntMatrix& matrix() const { return m_; }
  std::size_t rank() const { return m_.size(); }

  /// Coordinates of xi*a, i.e. M^T a.
  GroupElem apply(const GroupElem& a) const;
  ScaleUnit inverse() const;
  /// (this * other)(a) = this(other(a)).
  ScaleUnit compose(const ScaleUnit& other) const;

  bool operator==(const ScaleUnit&) const = default;

 private:
  Scalar u_;
  IntMatrix m_;
};

/// chi(a) = prod_i chi(eps_i)^{a_i}.
class Character {
 public:
  /// InvalidParams if a value is zero.
  explicit Character(std::vector<Scalar> values);
  static Character trivial(std::size_t rank);

  const std::vector<Scalar>& values() const { return values_; }
  Scalar operator()(const GroupElem& a) const;

  Character operator*(const Character& o) const;
  Character inverse() const;
  /// a -> chi(xi a).
  Character pullback(const ScaleUnit& xi) const;

  bool operator==(const Character&) const = default;

 private:
  std::vector<Scalar> values_;
};

/// theta(xi, chi, f, l, l0, l1, l2, l3).
struct AutParams {
  ScaleUnit xi;
  Character chi;
  AddHom f;
  Scalar l;
  Scalar l0, l1, l2, l3;

  static AutParams identity(std::size_t rank);

  std::size_t rank() const { return xi.rank(); }
  bool operator==(const AutParams&) const = default;
};

std::string to_string(const AutParams& p);

/// Rank agreement, l != 0 and the lambda gating of the deformation slots
/// (GateViolation for a nonzero ungated slot or l1 != 0 at lambda = 1).
void validate(const AlgebraContext& ctx, const AutParams& p);

/// exp(ad u) for u in the I-span: x -> x + [u, x].
struct InnerAut {
  Element u;
};

Element aut_apply(const AlgebraContext& ctx, const AutParams& p, const BasisKey& x);
Element aut_apply(const AlgebraContext& ctx, const AutParams& p, const Element& x);
Element inner_apply(const AlgebraContext& ctx, const InnerAut& inner, const Element& x);

/// theta' * theta (apply theta first).
AutParams aut_compose(const AutParams& outer, const AutParams& inner);
AutParams aut_inverse(const AutParams& p);

struct AutFactors {
  ScaleUnit t;
  Character n;
  Scalar s;
  AutParams k;  // xi = 1, chi = 1, l = 1

  /// theta(t) * theta(n) * theta(s) * k
  AutParams recompose() const;
};

AutFactors aut_factor(const AutParams& p);

/// m[x, y] = [m x, m y] for all pairs of window keys (central keys included
/// outside the plain variant).
CheckReport hom_check(const AlgebraContext& ctx, const BasisMap& m, int radius);

/// The extension of theta to the universal central extension.
/// LambdaMinusOne when lambda = -1, NonzeroL2 when l2 != 0.
Element aut_lift_apply(const AlgebraContext& ctx, const AutParams& p, const BasisKey& x);
Element aut_lift_apply(const AlgebraContext& ctx, const AutParams& p, const Element& x);

}  // namespace hv
