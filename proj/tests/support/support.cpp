#include "support.hpp"

#include "hv/errors.hpp"

namespace hv::test {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, int bound) {
  Rational q(uniform(rng, -bound, bound), uniform(rng, 1, bound));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(Rng& rng, int bound) {
  Rational q;
  while (q == 0) q = random_rational(rng, bound);
  return q;
}

Scalar random_scalar(Rng& rng, std::size_t rank) {
  Scalar num(random_rational(rng));
  Scalar den(1L);
  for (std::size_t i = 2; i <= rank; ++i) {
    const Scalar e = Scalar::indeterminate(static_cast<unsigned>(i));
    num += Scalar(random_rational(rng, 3)) * e;
    if (uniform(rng, 0, 2) == 0) num += Scalar(random_rational(rng, 3)) * e * e;
    if (uniform(rng, 0, 3) == 0) den *= e + Scalar(random_nonzero_rational(rng, 3));
  }
  return num / den;
}

Scalar random_nonzero_scalar(Rng& rng, std::size_t rank) {
  Scalar s;
  while (s.is_zero()) s = random_scalar(rng, rank);
  return s;
}

Element random_element(Rng& rng, const AlgebraContext& ctx, int radius, int terms) {
  const auto keys = window_keys(ctx, radius);
  Element x;
  for (int t = 0; t < terms; ++t)
    x.add(keys[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(keys.size()) - 1))],
          random_scalar(rng, ctx.rank()));
  return x;
}

LinearFunctional random_functional(Rng& rng, const AlgebraContext& ctx, int radius) {
  LinearFunctional f;
  for (const auto& k : window_keys(ctx, radius))
    if (uniform(rng, 0, 1) == 0) {
      const Scalar v = random_scalar(rng, ctx.rank());
      if (!v.is_zero()) f.values[k] = v;
    }
  return f;
}

AutParams random_aut_params(Rng& rng, const AlgebraContext& ctx, bool liftable, bool rational_only) {
  const std::size_t n = ctx.rank();
  auto scalar = [&](bool nonzero) {
    if (rational_only) return Scalar(nonzero ? random_nonzero_rational(rng) : random_rational(rng));
    return nonzero ? random_nonzero_scalar(rng, n) : random_scalar(rng, n);
  };
  AutParams p = AutParams::identity(n);
  if (uniform(rng, 0, 1) == 1) p.xi = ScaleUnit::negation(n);
  std::vector<Scalar> chi;
  for (std::size_t i = 0; i < n; ++i) chi.push_back(scalar(true));
  p.chi = Character(chi);
  p.l = scalar(true);
  if (delta_lambda(ctx, 1)) {
    p.f.values.clear();
    for (std::size_t i = 0; i < n; ++i) p.f.values.push_back(scalar(false));
  } else {
    p.l1 = scalar(false);
  }
  if (delta_lambda(ctx, 0)) p.l0 = scalar(false);
  if (delta_lambda(ctx, -1) && !liftable) p.l2 = scalar(false);
  if (delta_lambda(ctx, -2)) p.l3 = scalar(false);
  return p;
}

InnerAut random_inner(Rng& rng, const AlgebraContext& ctx, int radius) {
  InnerAut inner;
  for (const auto& a : window(ctx.rank(), radius))
    if (uniform(rng, 0, 2) == 0) inner.u.add(BasisKey::I(a), random_scalar(rng, ctx.rank()));
  return inner;
}

Element lift_image_from_brackets(const AlgebraContext& ext, const AutParams& p, const BasisKey& k) {
  const AlgebraContext plain = ext.with_variant(Variant::Plain);
  const std::size_t n = ext.rank();
  const GroupElem e1 = GroupElem::unit(n, 1);
  auto L = [&](const GroupElem& a) { return aut_apply(plain, p, BasisKey::L(a)); };
  auto I = [&](const GroupElem& a) { return aut_apply(plain, p, BasisKey::I(a)); };
  auto br = [&](const Element& x, const Element& y) { return bracket(ext, x, y); };

  // [L_1, L_-1] = -2 L_0 and [L_-1, I_1] = (1 + lambda) I_0 carry no charge.
  const Element l0 = Scalar(Rational(-1, 2)) * br(L(e1), L(-e1));
  const Element i0 = Scalar(Rational(1) / (1 + ext.lambda())) * br(L(-e1), I(e1));
  switch (k.kind) {
    case KeyKind::L:
      return l0;
    case KeyKind::I:
      return i0;
    case KeyKind::CL:  // [L_2, L_-2] = -4 L_0 + CL/2
      return Scalar(2L) * (br(L(e1 * 2), L(-e1 * 2)) + Scalar(4L) * l0);
    case KeyKind::CI:  // [I_1, I_-1] = CI
      return br(I(e1), I(-e1));
    case KeyKind::CLI:
      if (k.index == 0)  // [L_1, I_-1] = -I_0 + 2 CLI0
        return Scalar(Rational(1, 2)) * (br(L(e1), I(-e1)) + i0);
      if (k.index == 1)  // [L_2, I_-2] = -4 I_0 + CLI1/2
        return Scalar(2L) * (br(L(e1 * 2), I(-e1 * 2)) + Scalar(4L) * i0);
      {  // [L_ei, I_-ei] = e_i I_0 + CLIi
        const GroupElem ei = GroupElem::unit(n, static_cast<std::size_t>(k.index));
        return br(L(ei), I(-ei)) - value(ei) * i0;
      }
    case KeyKind::CLIprime:
      break;
  }
  throw Error(ErrorKind::InvalidParams, "no lift image for " + to_string(k));
}

BasisMap corrupted(BasisMap m, const BasisKey& target, const Element& extra) {
  return [m = std::move(m), target, extra](const BasisKey& k) {
    Element img = m(k);
    if (k == target) img += extra;
    return img;
  };
}

}  // namespace hv::test

namespace hv::test {

namespace {

AddHom random_addhom(Rng& rng, std::size_t rank) {
  AddHom A;
  for (std::size_t i = 0; i < rank; ++i) A.values.push_back(Scalar(random_rational(rng)));
  return A;
}

GroupElem random_degree(Rng& rng, std::size_t rank) {
  GroupElem a;
  while (a.rank() == 0 || a.is_zero()) {
    std::vector<int> c(rank);
    for (auto& x : c) x = std::uniform_int_distribution<int>(-1, 1)(rng);
    a = GroupElem(c);
  }
  return a;
}

std::vector<DerivationDescriptor> plain_descriptors(Rng& rng, const AlgebraContext& ctx) {
  using D = DerivationDescriptor;
  const std::size_t n = ctx.rank();
  std::vector<D> out{D::simple(D::Kind::Phi), D::simple(D::Kind::Psi), D::xi(random_addhom(rng, n)),
                     D::xi(AddHom::identity(n)), D::ad_L(random_degree(rng, n)), D::ad_I(random_degree(rng, n))};
  if (delta_lambda(ctx, 0)) out.push_back(D::simple(D::Kind::Sigma0));
  if (delta_lambda(ctx, -1)) out.push_back(D::simple(D::Kind::SigmaM1));
  if (delta_lambda(ctx, -2)) out.push_back(D::simple(D::Kind::SigmaM2));
  if (delta_lambda(ctx, 1)) out.push_back(D::eta1(random_addhom(rng, n)));
  return out;
}

}  // namespace

std::vector<DerivationDescriptor> gated_descriptors(Rng& rng, const AlgebraContext& ctx) {
  using D = DerivationDescriptor;
  if (ctx.variant() == Variant::Plain) return plain_descriptors(rng, ctx);
  std::vector<D> out;
  if (delta_lambda(ctx, 0)) {
    out.push_back(D::simple(D::Kind::LiftPhiBar));
    out.push_back(D::simple(D::Kind::LiftSigma0Bar));
    out.push_back(D::xi_bar(random_addhom(rng, ctx.rank()), Scalar(random_rational(rng)), Scalar(random_rational(rng))));
    out.push_back(D::psi_bar(Scalar(random_rational(rng)), Scalar(random_rational(rng))));
    return out;
  }
  for (auto& d : plain_descriptors(rng, ctx.with_variant(Variant::Plain))) out.push_back(D::lifted(std::move(d)));
  return out;
}

}  // namespace hv::test
