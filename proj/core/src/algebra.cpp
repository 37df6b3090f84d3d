#include "hv/algebra.hpp"

#include <algorithm>

#include "hv/errors.hpp"

namespace hv {

std::strong_ordering BasisKey::operator<=>(const BasisKey& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = degree <=> o.degree; c != 0) return c;
  return index <=> o.index;
}

std::string to_string(const BasisKey& k) {
  switch (k.kind) {
    case KeyKind::L: return "L" + to_string(k.degree);
    case KeyKind::I: return "I" + to_string(k.degree);
    case KeyKind::CL: return "CL";
    case KeyKind::CI: return "CI";
    case KeyKind::CLI: return "CLI" + std::to_string(k.index);
    case KeyKind::CLIprime: return "CLIP";
  }
  return "?";
}

Element::Element(const BasisKey& k, const Scalar& c) { add(k, c); }

Scalar Element::coefficient(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar{} : it->second;
}

void Element::add(const BasisKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::add(const Element& x, const Scalar& c) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [k, v] : x.terms_) add(k, unit ? v : v * c);
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r.add(o);
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r.add(o, Scalar(-1L));
  return r;
}

Element Element::operator-() const {
  Element r;
  r.add(*this, Scalar(-1L));
  return r;
}

Element operator*(const Scalar& c, const Element& x) {
  Element r;
  r.add(x, c);
  return r;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    Scalar coef = c;
    if (!first) {
      if (coef.is_rational() && coef.to_rational() < 0) {
        out += " - ";
        coef = -coef;
      } else {
        out += " + ";
      }
    }
    first = false;
    out += coef.is_rational() ? to_string(coef) : "(" + to_string(coef) + ")";
    out += "*" + to_string(k);
  }
  return out;
}

std::vector<BasisKey> central_keys(const AlgebraContext& ctx) {
  std::vector<BasisKey> keys;
  switch (ctx.variant()) {
    case Variant::Plain:
      break;
    case Variant::Extended:
      keys.push_back(BasisKey::CL());
      if (delta_lambda(ctx, 0)) {
        keys.push_back(BasisKey::CI());
        keys.push_back(BasisKey::CLI(0));
      } else if (delta_lambda(ctx, 1)) {
        keys.push_back(BasisKey::CLI(1));
      } else if (delta_lambda(ctx, -2)) {
        for (int i = 2; i <= static_cast<int>(ctx.rank()); ++i) keys.push_back(BasisKey::CLI(i));
      }
      break;
    case Variant::DerivedPrime:
      keys = {BasisKey::CL(), BasisKey::CI(), BasisKey::CLI(0), BasisKey::CLIprime()};
      break;
  }
  return keys;
}

bool is_valid_key(const AlgebraContext& ctx, const BasisKey& k) {
  if (k.is_central()) {
    const auto keys = central_keys(ctx);
    return std::find(keys.begin(), keys.end(), k) != keys.end();
  }
  if (k.degree.rank() != ctx.rank()) return false;
  return !(k.kind == KeyKind::I && ctx.variant() == Variant::DerivedPrime && k.degree.is_zero());
}

void validate(const AlgebraContext& ctx, const BasisKey& k) {
  if (k.is_central()) {
    if (!is_valid_key(ctx, k))
      throw Error(ErrorKind::InactiveCentralKey,
                  to_string(k) + " is not active for lambda=" + to_string(ctx.lambda()) + " variant=" + to_string(ctx.variant()));
    return;
  }
  if (k.degree.rank() != ctx.rank())
    throw Error(ErrorKind::RankMismatch, to_string(k) + " in a rank-" + std::to_string(ctx.rank()) + " algebra");
  if (k.kind == KeyKind::I && ctx.variant() == Variant::DerivedPrime && k.degree.is_zero())
    throw Error(ErrorKind::VariantMismatch, "I(0) does not belong to the derived subalgebra");
}

void validate(const AlgebraContext& ctx, const Element& x) {
  for (const auto& [k, c] : x.terms()) validate(ctx, k);
}

std::vector<BasisKey> window_keys(const AlgebraContext& ctx, int radius, bool with_center) {
  std::vector<BasisKey> keys;
  const auto w = window(ctx.rank(), radius);
  for (const auto& a : w) keys.push_back(BasisKey::L(a));
  for (const auto& a : w) {
    if (ctx.variant() == Variant::DerivedPrime && a.is_zero()) continue;
    keys.push_back(BasisKey::I(a));
  }
  if (with_center)
    for (const auto& c : central_keys(ctx)) keys.push_back(c);
  return keys;
}

namespace {

const Rational kTwelfth(1, 12);

// (a^3 - a) / 12
Scalar virasoro_charge(const Scalar& a) { return (a * a * a - a) * Scalar(kTwelfth); }

Element bracket_basis(const AlgebraContext& ctx, const BasisKey& x, const BasisKey& y, bool with_center) {
  Element out;
  if (x.is_central() || y.is_central()) return out;
  if (x.kind == KeyKind::I && y.kind == KeyKind::L) return -bracket_basis(ctx, y, x, with_center);

  const GroupElem& a = x.degree;
  const GroupElem& b = y.degree;
  const GroupElem sum = a + b;
  const bool balanced = sum.is_zero();
  const bool extended = with_center && ctx.variant() == Variant::Extended;
  const bool prime = with_center && ctx.variant() == Variant::DerivedPrime;
  const Scalar va = value(a);

  if (x.kind == KeyKind::L && y.kind == KeyKind::L) {
    out.add(BasisKey::L(sum), value(b) - va);
    if (balanced && (extended || prime)) out.add(BasisKey::CL(), virasoro_charge(va));
    return out;
  }
  if (x.kind == KeyKind::L && y.kind == KeyKind::I) {
    out.add(BasisKey::I(sum), value(b) - Scalar(ctx.lambda()) * va);
    if (!balanced) return out;
    if (extended) {
      if (delta_lambda(ctx, 0)) {
        out.add(BasisKey::CLI(0), va * va + va);
      } else if (delta_lambda(ctx, 1)) {
        out.add(BasisKey::CLI(1), virasoro_charge(va));
      } else if (delta_lambda(ctx, -2)) {
        for (std::size_t i = 2; i <= ctx.rank(); ++i) out.add(BasisKey::CLI(static_cast<int>(i)), Scalar(static_cast<long>(a[i - 1])));
      }
    } else if (prime) {
      out.add(BasisKey::CLI(0), va);
      out.add(BasisKey::CLIprime(), Scalar(1L));
    }
    return out;
  }
  // [I_a, I_b]
  if (balanced) {
    if (extended && delta_lambda(ctx, 0)) out.add(BasisKey::CI(), va);
    if (prime) out.add(BasisKey::CI(), va.inverse());
  }
  return out;
}

Element bracket_elements(const AlgebraContext& ctx, const Element& x, const Element& y, bool with_center) {
  Element out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out.add(bracket_basis(ctx, kx, ky, with_center), cx * cy);
  return out;
}

}  // namespace

Element bracket(const AlgebraContext& ctx, const BasisKey& x, const BasisKey& y) {
  validate(ctx, x);
  validate(ctx, y);
  return bracket_basis(ctx, x, y, true);
}

Element bracket(const AlgebraContext& ctx, const Element& x, const Element& y) {
  validate(ctx, x);
  validate(ctx, y);
  return bracket_elements(ctx, x, y, true);
}

Element bracket_centerless(const AlgebraContext& ctx, const BasisKey& x, const BasisKey& y) {
  validate(ctx, x);
  validate(ctx, y);
  return bracket_basis(ctx, x, y, false);
}

Element bracket_centerless(const AlgebraContext& ctx, const Element& x, const Element& y) {
  validate(ctx, x);
  validate(ctx, y);
  return bracket_elements(ctx, x, y, false);
}

Element drop_center(const Element& x) {
  Element out;
  for (const auto& [k, c] : x.terms())
    if (!k.is_central()) out.add(k, c);
  return out;
}

Element apply_linear(const BasisMap& m, const Element& x) {
  Element out;
  for (const auto& [k, c] : x.terms()) out.add(m(k), c);
  return out;
}

CheckReport jacobi_check(const AlgebraContext& ctx, int radius) {
  if (radius < 1) throw Error(ErrorKind::InvalidParams, "radius must be >= 1");
  CheckReport report;
  report.check = "jacobi";
  const auto keys = window_keys(ctx, radius, true);
  const std::size_t n = keys.size();

  std::map<std::pair<std::size_t, std::size_t>, Element> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Element xy = bracket_basis(ctx, keys[i], keys[j], true);
      Element yx = bracket_basis(ctx, keys[j], keys[i], true);
      ++report.cases;
      if (!(xy + yx).is_zero())
        report.fail("antisymmetry (" + to_string(keys[i]) + ", " + to_string(keys[j]) + "): " + to_string(xy + yx));
      if (i != j && !xy.is_zero()) products.emplace(std::make_pair(i, j), std::move(xy));
    }
  }
  auto product = [&](std::size_t i, std::size_t j) -> Element {
    if (i == j) return {};
    const bool swap = i > j;
    auto it = products.find(swap ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == products.end()) return {};
    return swap ? -it->second : it->second;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element xy = product(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        ++report.cases;
        Element jac = bracket_elements(ctx, xy, Element(keys[k]), true);
        jac += bracket_elements(ctx, product(j, k), Element(keys[i]), true);
        jac += bracket_elements(ctx, product(k, i), Element(keys[j]), true);
        if (!jac.is_zero())
          report.fail("jacobi (" + to_string(keys[i]) + ", " + to_string(keys[j]) + ", " + to_string(keys[k]) +
                      "): " + to_string(jac));
      }
    }
  }
  return report;
}

}  // namespace hv
