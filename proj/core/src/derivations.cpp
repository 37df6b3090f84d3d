#include "hv/derivations.hpp"

#include "hv/errors.hpp"

namespace hv {

using Kind = DerivationDescriptor::Kind;

Scalar AddHom::operator()(const GroupElem& a) const {
  if (a.rank() != values.size())
    throw Error(ErrorKind::RankMismatch, "homomorphism of rank " + std::to_string(values.size()) + " applied to " + to_string(a));
  Scalar s;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (a[i] != 0) s += Scalar(static_cast<long>(a[i])) * values[i];
  return s;
}

AddHom AddHom::identity(std::size_t rank) {
  AddHom A;
  A.values.emplace_back(1L);
  for (std::size_t i = 2; i <= rank; ++i) A.values.push_back(Scalar::indeterminate(static_cast<unsigned>(i)));
  return A;
}

DerivationDescriptor DerivationDescriptor::simple(Kind kind) {
  DerivationDescriptor d;
  d.kind = kind;
  return d;
}

DerivationDescriptor DerivationDescriptor::xi(AddHom A) {
  DerivationDescriptor d = simple(Kind::Xi);
  d.A = std::move(A);
  return d;
}

DerivationDescriptor DerivationDescriptor::eta1(AddHom A) {
  DerivationDescriptor d = simple(Kind::Eta1);
  d.A = std::move(A);
  return d;
}

DerivationDescriptor DerivationDescriptor::ad_L(const GroupElem& a) {
  DerivationDescriptor d = simple(Kind::AdL);
  d.degree = a;
  return d;
}

DerivationDescriptor DerivationDescriptor::ad_I(const GroupElem& a) {
  DerivationDescriptor d = simple(Kind::AdI);
  d.degree = a;
  return d;
}

DerivationDescriptor DerivationDescriptor::lifted(DerivationDescriptor inner) {
  DerivationDescriptor d = simple(Kind::LiftedTrivial);
  d.inner = std::make_shared<const DerivationDescriptor>(std::move(inner));
  return d;
}

DerivationDescriptor DerivationDescriptor::xi_bar(AddHom A, Scalar l, Scalar k) {
  DerivationDescriptor d = simple(Kind::LiftXiBar);
  d.A = std::move(A);
  d.l = std::move(l);
  d.k = std::move(k);
  return d;
}

DerivationDescriptor DerivationDescriptor::psi_bar(Scalar l, Scalar k) {
  DerivationDescriptor d = simple(Kind::LiftPsiBar);
  d.l = std::move(l);
  d.k = std::move(k);
  return d;
}

bool DerivationDescriptor::is_lifted() const {
  switch (kind) {
    case Kind::LiftedTrivial:
    case Kind::LiftPhiBar:
    case Kind::LiftSigma0Bar:
    case Kind::LiftXiBar:
    case Kind::LiftPsiBar:
      return true;
    default:
      return false;
  }
}

GroupElem DerivationDescriptor::map_degree(std::size_t rank) const {
  if (kind == Kind::AdL || kind == Kind::AdI) return degree;
  if (kind == Kind::LiftedTrivial && inner) return inner->map_degree(rank);
  return GroupElem::zero(rank);
}

namespace {

std::string hom_text(const AddHom& A) {
  std::string s = "[";
  for (std::size_t i = 0; i < A.values.size(); ++i) s += (i ? "," : "") + to_string(A.values[i]);
  return s + "]";
}

}  // namespace

std::string to_string(const DerivationDescriptor& d) {
  switch (d.kind) {
    case Kind::Phi: return "phi";
    case Kind::Psi: return "psi";
    case Kind::Sigma0: return "sigma0";
    case Kind::SigmaM1: return "sigma-1";
    case Kind::SigmaM2: return "sigma-2";
    case Kind::Xi: return "xi(" + hom_text(d.A) + ")";
    case Kind::Eta1: return "eta1(" + hom_text(d.A) + ")";
    case Kind::AdL: return "adL(" + to_string(d.degree) + ")";
    case Kind::AdI: return "adI(" + to_string(d.degree) + ")";
    case Kind::LiftedTrivial: return "lifted(" + (d.inner ? to_string(*d.inner) : std::string("?")) + ")";
    case Kind::LiftPhiBar: return "phibar";
    case Kind::LiftSigma0Bar: return "sigma0bar";
    case Kind::LiftXiBar: return "xibar(" + hom_text(d.A) + "," + to_string(d.l) + "," + to_string(d.k) + ")";
    case Kind::LiftPsiBar: return "psibar(" + to_string(d.l) + "," + to_string(d.k) + ")";
  }
  return "?";
}

void check_gate(const AlgebraContext& ctx, const DerivationDescriptor& d) {
  auto gate = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::GateViolation, to_string(d) + " requires " + what);
  };
  const bool lifted = d.is_lifted();
  if (lifted && ctx.variant() != Variant::Extended)
    throw Error(ErrorKind::VariantMismatch, to_string(d) + " acts on the extended algebra");
  if (!lifted && ctx.variant() != Variant::Plain)
    throw Error(ErrorKind::VariantMismatch, to_string(d) + " acts on the plain algebra");

  switch (d.kind) {
    case Kind::Sigma0:
    case Kind::LiftPhiBar:
    case Kind::LiftSigma0Bar:
    case Kind::LiftXiBar:
    case Kind::LiftPsiBar:
      gate(delta_lambda(ctx, 0), "lambda = 0");
      break;
    case Kind::SigmaM1:
      gate(delta_lambda(ctx, -1), "lambda = -1");
      break;
    case Kind::SigmaM2:
      gate(delta_lambda(ctx, -2), "lambda = -2");
      break;
    case Kind::Eta1:
      gate(delta_lambda(ctx, 1), "lambda = 1");
      break;
    case Kind::LiftedTrivial:
      gate(!delta_lambda(ctx, 0) && !delta_lambda(ctx, -1), "lambda not in {0, -1}");
      if (!d.inner) throw Error(ErrorKind::InvalidParams, "lifted() needs an inner descriptor");
      if (d.inner->is_lifted()) throw Error(ErrorKind::InvalidParams, "lifted() of a lifted descriptor");
      check_gate(ctx.with_variant(Variant::Plain), *d.inner);
      break;
    default:
      break;
  }
  if ((d.kind == Kind::Xi || d.kind == Kind::Eta1 || d.kind == Kind::LiftXiBar) && d.A.values.size() != ctx.rank())
    throw Error(ErrorKind::RankMismatch, to_string(d) + " in a rank-" + std::to_string(ctx.rank()) + " algebra");
  if ((d.kind == Kind::AdL || d.kind == Kind::AdI) && d.degree.rank() != ctx.rank())
    throw Error(ErrorKind::RankMismatch, to_string(d) + " in a rank-" + std::to_string(ctx.rank()) + " algebra");
}

namespace {

// Basis action, gate already checked.
Element apply_basis(const AlgebraContext& ctx, const DerivationDescriptor& d, const BasisKey& x) {
  const bool is_L = x.kind == KeyKind::L;
  const bool is_I = x.kind == KeyKind::I;
  const GroupElem& a = x.degree;
  const bool at_zero = (is_L || is_I) && a.is_zero();
  Element out;

  switch (d.kind) {
    case Kind::Phi:
      if (is_L) out.add(BasisKey::I(a), value(a));
      return out;
    case Kind::Psi:
      if (is_I) out.add(x, Scalar(1L));
      return out;
    case Kind::Sigma0:
      if (is_L) out.add(BasisKey::I(a), Scalar(1L));
      return out;
    case Kind::SigmaM1:
      if (is_L) out.add(BasisKey::I(a), value(a).pow(2));
      return out;
    case Kind::SigmaM2:
      if (is_L) out.add(BasisKey::I(a), value(a).pow(3));
      return out;
    case Kind::Xi:
      if (is_L || is_I) out.add(x, d.A(a));
      return out;
    case Kind::Eta1:
      if (is_L) out.add(BasisKey::I(a), d.A(a));
      return out;
    case Kind::AdL:
      return bracket(ctx, BasisKey::L(d.degree), x);
    case Kind::AdI:
      return bracket(ctx, BasisKey::I(d.degree), x);

    case Kind::LiftedTrivial: {
      const DerivationDescriptor& inner = *d.inner;
      if (inner.kind == Kind::AdL || inner.kind == Kind::AdI) return apply_basis(ctx, inner, x);
      if (x.is_central()) {
        // psi scales the L-I pairing, so its lift fixes the L-I charges.
        if (inner.kind == Kind::Psi && x.kind == KeyKind::CLI) out.add(x, Scalar(1L));
        return out;
      }
      return apply_basis(ctx.with_variant(Variant::Plain), inner, x);
    }

    case Kind::LiftPhiBar:
      if (is_L) {
        out.add(BasisKey::I(a), value(a));
        if (at_zero) out.add(BasisKey::CLI(0), Scalar(1L));
      } else if (is_I) {
        if (at_zero) out.add(BasisKey::CI(), Scalar(1L));
      } else if (x.kind == KeyKind::CL) {
        out.add(BasisKey::CLI(0), Scalar(-24L));
      } else if (x.kind == KeyKind::CLI) {
        out.add(BasisKey::CI(), Scalar(1L));
      }
      return out;
    case Kind::LiftSigma0Bar:
      if (is_L) {
        out.add(BasisKey::I(a), Scalar(1L));
        if (at_zero) out.add(BasisKey::CLI(0), Scalar(-1L));
      } else if (is_I && at_zero) {
        out.add(BasisKey::CI(), Scalar(-1L));
      }
      return out;
    case Kind::LiftXiBar:
    case Kind::LiftPsiBar: {
      const bool xi = d.kind == Kind::LiftXiBar;
      const Scalar km = d.k - d.l;
      if (is_L) {
        if (xi) out.add(x, d.A(a));
        out.add(BasisKey::I(a), d.l + d.k * value(a));
        if (at_zero) out.add(BasisKey::CLI(0), km);
      } else if (is_I) {
        out.add(x, xi ? d.A(a) : Scalar(1L));
        if (at_zero) out.add(BasisKey::CI(), km);
      } else if (x.kind == KeyKind::CL) {
        out.add(BasisKey::CLI(0), Scalar(-24L) * d.k);
      } else if (x.kind == KeyKind::CLI) {
        if (!xi) out.add(x, Scalar(1L));
        out.add(BasisKey::CI(), d.k);
      } else if (x.kind == KeyKind::CI) {
        if (!xi) out.add(x, Scalar(2L));
      }
      return out;
    }
  }
  return out;
}

}  // namespace

Element der_apply(const AlgebraContext& ctx, const DerivationDescriptor& d, const BasisKey& x) {
  check_gate(ctx, d);
  validate(ctx, x);
  return apply_basis(ctx, d, x);
}

Element der_apply(const AlgebraContext& ctx, const DerivationDescriptor& d, const Element& x) {
  check_gate(ctx, d);
  validate(ctx, x);
  Element out;
  for (const auto& [k, c] : x.terms()) out.add(apply_basis(ctx, d, k), c);
  return out;
}

CheckReport leibniz_check(const AlgebraContext& ctx, const BasisMap& d, int radius) {
  if (radius < 1) throw Error(ErrorKind::InvalidParams, "radius must be >= 1");
  CheckReport report;
  report.check = "leibniz";
  const auto keys = window_keys(ctx, radius, true);
  std::vector<Element> images;
  images.reserve(keys.size());
  for (const auto& k : keys) images.push_back(d(k));

  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      ++report.cases;
      const Element lhs = apply_linear(d, bracket(ctx, keys[i], keys[j]));
      const Element rhs = bracket(ctx, images[i], Element(keys[j])) + bracket(ctx, Element(keys[i]), images[j]);
      if (!(lhs == rhs))
        report.fail("leibniz (" + to_string(keys[i]) + ", " + to_string(keys[j]) + "): " + to_string(lhs - rhs));
    }
  }
  return report;
}

CheckReport leibniz_check(const AlgebraContext& ctx, const DerivationDescriptor& d, int radius) {
  check_gate(ctx, d);
  return leibniz_check(ctx, [&](const BasisKey& k) { return apply_basis(ctx, d, k); }, radius);
}

CheckReport inner_derivation_identity_check(const AlgebraContext& ctx, int radius) {
  if (radius < 1) throw Error(ErrorKind::InvalidParams, "radius must be >= 1");
  if (ctx.variant() != Variant::Plain) throw Error(ErrorKind::VariantMismatch, "inner derivation identities are stated on g");
  CheckReport report;
  report.check = "inner-derivation-identity";
  const std::size_t n = ctx.rank();
  const auto xi = DerivationDescriptor::xi(AddHom::identity(n));
  const auto phi = DerivationDescriptor::simple(Kind::Phi);
  const BasisKey l0 = BasisKey::L(GroupElem::zero(n));
  const BasisKey i0 = BasisKey::I(GroupElem::zero(n));
  const Scalar lambda(ctx.lambda());

  for (const auto& x : window_keys(ctx, radius)) {
    report.cases += 2;
    const Element adl = bracket(ctx, l0, x);
    const Element xix = apply_basis(ctx, xi, x);
    if (!(adl == xix)) report.fail("xi_value vs ad L0 at " + to_string(x) + ": " + to_string(xix - adl));
    const Element adi = bracket(ctx, i0, x);
    const Element lphi = lambda * apply_basis(ctx, phi, x);
    if (!(adi == lphi)) report.fail("ad I0 vs lambda*phi at " + to_string(x) + ": " + to_string(adi - lphi));
  }
  return report;
}

}  // namespace hv
