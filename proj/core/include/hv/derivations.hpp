#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/report.hpp"

namespace hv {

/// Additive homomorphism G -> field given by A(eps_1), ..., A(eps_n).
struct AddHom {
  std::vector<Scalar> values;

  Scalar operator()(const GroupElem& a) const;
  /// a -> value(a), i.e. A(eps_i) = e_i.
  static AddHom identity(std::size_t rank);
  bool operator==(const AddHom&) const = default;
};

struct DerivationDescriptor {
  enum class Kind {
    Phi,
    Psi,
    Sigma0,
    SigmaM1,
    SigmaM2,
    Xi,
    Eta1,
    AdL,
    AdI,
    LiftedTrivial,
    LiftPhiBar,
    LiftSigma0Bar,
    LiftXiBar,
    LiftPsiBar,
  };

  Kind kind = Kind::Phi;
  AddHom A;                // Xi, Eta1, LiftXiBar
  GroupElem degree;        // AdL, AdI
  Scalar l;                // LiftXiBar, LiftPsiBar
  Scalar k;
  std::shared_ptr<const DerivationDescriptor> inner;  // LiftedTrivial

  static DerivationDescriptor simple(Kind kind);
  static DerivationDescriptor xi(AddHom A);
  static DerivationDescriptor eta1(AddHom A);
  static DerivationDescriptor ad_L(const GroupElem& a);
  static DerivationDescriptor ad_I(const GroupElem& a);
  static DerivationDescriptor lifted(DerivationDescriptor inner);
  static DerivationDescriptor xi_bar(AddHom A, Scalar l, Scalar k);
  static DerivationDescriptor psi_bar(Scalar l, Scalar k);

  /// Acts on the extension rather than on g.
  bool is_lifted() const;
  /// Degree of the map: a for ad L_a / ad I_a, 0 otherwise.
  GroupElem map_degree(std::size_t rank) const;
};

std::string to_string(const DerivationDescriptor& d);

/// GateViolation for a lambda gate, VariantMismatch when a lifted descriptor
/// is used outside the extension or a plain one outside g, RankMismatch for a
/// wrongly sized AddHom/degree.
void check_gate(const AlgebraContext& ctx, const DerivationDescriptor& d);

Element der_apply(const AlgebraContext& ctx, const DerivationDescriptor& d, const BasisKey& x);
Element der_apply(const AlgebraContext& ctx, const DerivationDescriptor& d, const Element& x);

/// d[x,y] = [dx,y] + [x,dy] for all pairs of window keys (central keys
/// included in the extension).
CheckReport leibniz_check(const AlgebraContext& ctx, const BasisMap& d, int radius);
CheckReport leibniz_check(const AlgebraContext& ctx, const DerivationDescriptor& d, int radius);

/// xi_value = ad L_0 and ad I_0 = lambda * phi, pointwise on the window of g.
CheckReport inner_derivation_identity_check(const AlgebraContext& ctx, int radius);

}  // namespace hv
