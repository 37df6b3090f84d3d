#include "hv/automorphisms.hpp"

#include "hv/errors.hpp"

namespace hv {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

void check_square(const IntMatrix& m) {
  if (m.empty() || m.size() > kMaxRank) throw Error(ErrorKind::InvalidParams, "lattice matrix must be n x n with 1 <= n <= 9");
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorKind::InvalidParams, "lattice matrix must be square");
}

// Gauss-Jordan over Q. Returns the determinant; fills inv when it is nonzero.
Rational invert(const IntMatrix& m, std::vector<std::vector<Rational>>& inv) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (auto& v : a[col]) v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  inv.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return det;
}

Scalar eps_value(std::size_t i) {  // value(eps_i), 1-based
  return i == 1 ? Scalar(1L) : Scalar::indeterminate(static_cast<unsigned>(i));
}

}  // namespace

ScaleUnit::ScaleUnit(Scalar u, IntMatrix m) : u_(std::move(u)), m_(std::move(m)) {
  check_square(m_);
  std::vector<std::vector<Rational>> inv;
  const Rational det = invert(m_, inv);
  if (det != 1 && det != -1) throw Error(ErrorKind::InvalidParams, "lattice matrix must have determinant +-1");
  const std::size_t n = m_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar rhs;
    for (std::size_t j = 0; j < n; ++j)
      if (m_[i][j] != 0) rhs += Scalar(m_[i][j]) * eps_value(j + 1);
    if (!(u_ * eps_value(i + 1) == rhs))
      throw Error(ErrorKind::InvalidParams, "xi = " + to_string(u_) + " does not map eps_" + std::to_string(i + 1) + " to row " +
                                                std::to_string(i + 1) + " of the lattice matrix");
  }
}

ScaleUnit ScaleUnit::identity(std::size_t rank) { return {Scalar(1L), identity_matrix(rank)}; }

ScaleUnit ScaleUnit::negation(std::size_t rank) {
  IntMatrix m = identity_matrix(rank);
  for (std::size_t i = 0; i < rank; ++i) m[i][i] = -1;
  return {Scalar(-1L), m};
}

GroupElem ScaleUnit::apply(const GroupElem& a) const {
  if (a.rank() != rank()) throw Error(ErrorKind::RankMismatch, "scale unit of rank " + std::to_string(rank()) + " applied to " + to_string(a));
  std::array<int, kMaxRank> c{};
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) c[j] += static_cast<int>(m_[i][j] * a[i]);
  return GroupElem(std::span<const int>(c.data(), rank()));
}

ScaleUnit ScaleUnit::inverse() const {
  std::vector<std::vector<Rational>> inv;
  invert(m_, inv);
  IntMatrix m(rank(), std::vector<long>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m[i][j] = inv[i][j].get_num().get_si();
  return {u_.inverse(), m};
}

ScaleUnit ScaleUnit::compose(const ScaleUnit& other) const {
  if (other.rank() != rank()) throw Error(ErrorKind::RankMismatch, "composing scale units of different rank");
  const std::size_t n = rank();
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) m[i][j] += other.m_[i][k] * m_[k][j];
  return {u_ * other.u_, m};
}

Character::Character(std::vector<Scalar> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v.is_zero()) throw Error(ErrorKind::InvalidParams, "character values must be nonzero");
}

Character Character::trivial(std::size_t rank) { return Character(std::vector<Scalar>(rank, Scalar(1L))); }

Scalar Character::operator()(const GroupElem& a) const {
  if (a.rank() != values_.size()) throw Error(ErrorKind::RankMismatch, "character of rank " + std::to_string(values_.size()) + " applied to " + to_string(a));
  Scalar s(1L);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (a[i] != 0) s *= values_[i].pow(a[i]);
  return s;
}

Character Character::operator*(const Character& o) const {
  std::vector<Scalar> v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.values_.at(i);
  return Character(std::move(v));
}

Character Character::inverse() const {
  std::vector<Scalar> v;
  for (const auto& x : values_) v.push_back(x.inverse());
  return Character(std::move(v));
}

Character Character::pullback(const ScaleUnit& xi) const {
  std::vector<Scalar> v;
  for (std::size_t i = 1; i <= values_.size(); ++i) v.push_back((*this)(xi.apply(GroupElem::unit(values_.size(), i))));
  return Character(std::move(v));
}

AutParams AutParams::identity(std::size_t rank) {
  return {ScaleUnit::identity(rank), Character::trivial(rank), AddHom{std::vector<Scalar>(rank)}, Scalar(1L), {}, {}, {}, {}};
}

std::string to_string(const AutParams& p) {
  auto list = [](const std::vector<Scalar>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + "]";
  };
  std::string m = "[";
  for (std::size_t i = 0; i < p.rank(); ++i) {
    m += i ? ",[" : "[";
    for (std::size_t j = 0; j < p.rank(); ++j) m += (j ? "," : "") + std::to_string(p.xi.matrix()[i][j]);
    m += "]";
  }
  m += "]";
  return "theta(xi=" + to_string(p.xi.u()) + " M=" + m + ", chi=" + list(p.chi.values()) + ", f=" + list(p.f.values) +
         ", l=" + to_string(p.l) + ", l0=" + to_string(p.l0) + ", l1=" + to_string(p.l1) + ", l2=" + to_string(p.l2) +
         ", l3=" + to_string(p.l3) + ")";
}

void validate(const AlgebraContext& ctx, const AutParams& p) {
  const std::size_t n = ctx.rank();
  if (p.xi.rank() != n || p.chi.values().size() != n || p.f.values.size() != n)
    throw Error(ErrorKind::RankMismatch, "automorphism parameters do not match rank " + std::to_string(n));
  if (p.l.is_zero()) throw Error(ErrorKind::InvalidParams, "l must be nonzero");
  auto gate = [&](bool nonzero, bool allowed, const char* what) {
    if (nonzero && !allowed) throw Error(ErrorKind::GateViolation, std::string(what) + " is nonzero for lambda = " + to_string(ctx.lambda()));
  };
  bool f_nonzero = false;
  for (const auto& v : p.f.values) f_nonzero = f_nonzero || !v.is_zero();
  gate(!p.l0.is_zero(), delta_lambda(ctx, 0), "l0");
  gate(!p.l2.is_zero(), delta_lambda(ctx, -1), "l2");
  gate(!p.l3.is_zero(), delta_lambda(ctx, -2), "l3");
  gate(f_nonzero, delta_lambda(ctx, 1), "f");
  gate(!p.l1.is_zero(), !delta_lambda(ctx, 1), "l1 (absorbed into f)");
}

namespace {

void require_plain(const AlgebraContext& ctx) {
  if (ctx.variant() != Variant::Plain) throw Error(ErrorKind::VariantMismatch, "automorphisms act on the plain algebra");
}

// tau(a) of the L-image
Scalar tau(const AlgebraContext& ctx, const AutParams& p, const GroupElem& a) {
  const Scalar va = value(a);
  Scalar t = p.l1 * va;
  if (delta_lambda(ctx, 0)) t += p.l0;
  if (delta_lambda(ctx, -1)) t += p.l2 * va * va;
  if (delta_lambda(ctx, -2)) t += p.l3 * va * va * va;
  if (delta_lambda(ctx, 1)) t += p.f(a);
  return t;
}

Element apply_basis(const AlgebraContext& ctx, const AutParams& p, const BasisKey& x) {
  Element out;
  const GroupElem b = p.xi.apply(x.degree);
  const Scalar c = p.chi(x.degree);
  if (x.kind == KeyKind::L) {
    out.add(BasisKey::L(b), c / p.xi.u());
    out.add(BasisKey::I(b), c * tau(ctx, p, x.degree));
  } else {
    out.add(BasisKey::I(b), p.l * c);
  }
  return out;
}

void check_lift_preconditions(const AlgebraContext& ctx, const AutParams& p) {
  if (delta_lambda(ctx, -1)) throw Error(ErrorKind::LambdaMinusOne, "no lift formula for lambda = -1");
  if (!p.l2.is_zero()) throw Error(ErrorKind::NonzeroL2, "lift requires l2 = 0");
  if (ctx.variant() != Variant::Extended) throw Error(ErrorKind::VariantMismatch, "lifted automorphisms act on the extended algebra");
  validate(ctx, p);
}

Element lift_basis(const AlgebraContext& ctx, const AutParams& p, const BasisKey& x) {
  const Scalar& u = p.xi.u();
  const Scalar ui = u.inverse();
  const IntMatrix& m = p.xi.matrix();
  const Scalar half(Rational(1, 2));
  const Scalar charge = (ui - u) * Scalar(Rational(1, 24));
  const bool l0 = delta_lambda(ctx, 0);
  Element out;

  switch (x.kind) {
    case KeyKind::L:
      out = apply_basis(ctx, p, x);
      if (x.degree.is_zero()) {
        out.add(BasisKey::CL(), charge);
        if (l0) {
          out.add(BasisKey::CLI(0), p.l1 * u - p.l0);
          out.add(BasisKey::CI(), half * u * (p.l1 * p.l1 - p.l0 * p.l0));
        }
      }
      return out;
    case KeyKind::I:
      out = apply_basis(ctx, p, x);
      if (x.degree.is_zero()) {
        if (delta_lambda(ctx, 1)) out.add(BasisKey::CLI(1), p.l * u * charge);
        if (l0) {
          out.add(BasisKey::CLI(0), p.l * u * (Scalar(1L) - ui));
          out.add(BasisKey::CI(), p.l * u * (p.l1 - p.l0));
        }
        if (delta_lambda(ctx, -2))
          for (std::size_t i = 2; i <= ctx.rank(); ++i)
            out.add(BasisKey::CLI(static_cast<int>(i)), p.l * ui * Scalar(m[0][i - 1]));
      }
      return out;
    case KeyKind::CL:
      out.add(BasisKey::CL(), u);
      if (l0) {
        out.add(BasisKey::CLI(0), Scalar(-24L) * p.l1 * u);
        out.add(BasisKey::CI(), Scalar(-12L) * p.l1 * p.l1 * u);
      }
      return out;
    case KeyKind::CLI:
      if (x.index == 0) {
        out.add(BasisKey::CLI(0), p.l * u);
        out.add(BasisKey::CI(), p.l * u * p.l1);
      } else if (x.index == 1) {
        out.add(x, p.l * u * u);
      } else {
        const std::size_t i = static_cast<std::size_t>(x.index);
        const Scalar ei = eps_value(i);
        for (std::size_t j = 2; j <= ctx.rank(); ++j) {
          const Scalar c = Scalar(m[i - 1][j - 1]) - ei * Scalar(m[0][j - 1]);
          out.add(BasisKey::CLI(static_cast<int>(j)), p.l * ui * c);
        }
      }
      return out;
    case KeyKind::CI:
      out.add(BasisKey::CI(), p.l * p.l * u);
      return out;
    case KeyKind::CLIprime:
      break;
  }
  return out;
}

}  // namespace

Element aut_apply(const AlgebraContext& ctx, const AutParams& p, const BasisKey& x) {
  require_plain(ctx);
  validate(ctx, p);
  validate(ctx, x);
  return apply_basis(ctx, p, x);
}

Element aut_apply(const AlgebraContext& ctx, const AutParams& p, const Element& x) {
  require_plain(ctx);
  validate(ctx, p);
  validate(ctx, x);
  Element out;
  for (const auto& [k, c] : x.terms()) out.add(apply_basis(ctx, p, k), c);
  return out;
}

Element inner_apply(const AlgebraContext& ctx, const InnerAut& inner, const Element& x) {
  require_plain(ctx);
  for (const auto& [k, c] : inner.u.terms())
    if (k.kind != KeyKind::I) throw Error(ErrorKind::InvalidParams, "inner automorphisms are generated by the I-span, got " + to_string(k));
  return x + bracket(ctx, inner.u, x);
}

AutParams aut_compose(const AutParams& outer, const AutParams& inner) {
  const std::size_t n = inner.rank();
  if (outer.rank() != n) throw Error(ErrorKind::RankMismatch, "composing automorphisms of different rank");
  const Scalar& u = inner.xi.u();
  const Scalar ui = u.inverse();
  AddHom f;
  for (std::size_t i = 1; i <= n; ++i) {
    const GroupElem image = inner.xi.apply(GroupElem::unit(n, i));
    f.values.push_back(ui * outer.f(image) + outer.l * inner.f.values[i - 1]);
  }
  return {outer.xi.compose(inner.xi),
          outer.chi.pullback(inner.xi) * inner.chi,
          std::move(f),
          outer.l * inner.l,
          ui * outer.l0 + outer.l * inner.l0,
          outer.l1 + outer.l * inner.l1,
          u * outer.l2 + outer.l * inner.l2,
          u * u * outer.l3 + outer.l * inner.l3};
}

AutParams aut_inverse(const AutParams& p) {
  const std::size_t n = p.rank();
  const ScaleUnit xi_inv = p.xi.inverse();
  const Scalar& u = p.xi.u();
  const Scalar ui = u.inverse();
  const Scalar li = p.l.inverse();
  AddHom f;
  for (std::size_t i = 1; i <= n; ++i) f.values.push_back(-li * u * p.f(xi_inv.apply(GroupElem::unit(n, i))));
  return {xi_inv,
          p.chi.pullback(xi_inv).inverse(),
          std::move(f),
          li,
          -li * u * p.l0,
          -li * p.l1,
          -li * ui * p.l2,
          -li * ui * ui * p.l3};
}

AutFactors aut_factor(const AutParams& p) {
  const std::size_t n = p.rank();
  const Scalar li = p.l.inverse();
  AutParams k = AutParams::identity(n);
  k.f.values.clear();
  for (const auto& v : p.f.values) k.f.values.push_back(v * li);
  k.l0 = p.l0 * li;
  k.l1 = p.l1 * li;
  k.l2 = p.l2 * li;
  k.l3 = p.l3 * li;
  return {p.xi, p.chi, p.l, std::move(k)};
}

AutParams AutFactors::recompose() const {
  const std::size_t n = t.rank();
  AutParams T = AutParams::identity(n);
  T.xi = t;
  AutParams N = AutParams::identity(n);
  N.chi = this->n;
  AutParams S = AutParams::identity(n);
  S.l = s;
  return aut_compose(T, aut_compose(N, aut_compose(S, k)));
}

CheckReport hom_check(const AlgebraContext& ctx, const BasisMap& m, int radius) {
  if (radius < 1) throw Error(ErrorKind::InvalidParams, "radius must be >= 1");
  CheckReport report;
  report.check = "hom";
  const auto keys = window_keys(ctx, radius, ctx.variant() != Variant::Plain);
  std::vector<Element> images;
  images.reserve(keys.size());
  for (const auto& k : keys) images.push_back(m(k));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      ++report.cases;
      const Element lhs = apply_linear(m, bracket(ctx, keys[i], keys[j]));
      const Element rhs = bracket(ctx, images[i], images[j]);
      if (!(lhs == rhs)) report.fail("hom (" + to_string(keys[i]) + ", " + to_string(keys[j]) + "): " + to_string(lhs - rhs));
    }
  }
  return report;
}

Element aut_lift_apply(const AlgebraContext& ctx, const AutParams& p, const BasisKey& x) {
  check_lift_preconditions(ctx, p);
  validate(ctx, x);
  return lift_basis(ctx, p, x);
}

Element aut_lift_apply(const AlgebraContext& ctx, const AutParams& p, const Element& x) {
  check_lift_preconditions(ctx, p);
  validate(ctx, x);
  Element out;
  for (const auto& [k, c] : x.terms()) out.add(lift_basis(ctx, p, k), c);
  return out;
}

}  // namespace hv
