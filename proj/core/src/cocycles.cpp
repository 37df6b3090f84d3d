#include "hv/cocycles.hpp"

#include "hv/errors.hpp"

namespace hv {

std::string to_string(BuiltinCocycle kind, int index) {
  switch (kind) {
    case BuiltinCocycle::CLform: return "CLform";
    case BuiltinCocycle::CIform: return "CIform";
    case BuiltinCocycle::CLI0form: return "CLI0form";
    case BuiltinCocycle::CLI1form: return "CLI1form";
    case BuiltinCocycle::CLIiform: return "CLIiform:" + std::to_string(index);
    case BuiltinCocycle::PrimeCI: return "PrimeCI";
    case BuiltinCocycle::PrimeCLI: return "PrimeCLI";
    case BuiltinCocycle::PrimeCLIprime: return "PrimeCLIprime";
  }
  return "?";
}

std::pair<BuiltinCocycle, int> parse_builtin_cocycle(std::string_view text) {
  static const std::pair<const char*, BuiltinCocycle> kNames[] = {
      {"CLform", BuiltinCocycle::CLform},     {"CIform", BuiltinCocycle::CIform},
      {"CLI0form", BuiltinCocycle::CLI0form}, {"CLI1form", BuiltinCocycle::CLI1form},
      {"PrimeCI", BuiltinCocycle::PrimeCI},   {"PrimeCLI", BuiltinCocycle::PrimeCLI},
      {"PrimeCLIprime", BuiltinCocycle::PrimeCLIprime}};
  for (const auto& [name, kind] : kNames)
    if (text == name) return {kind, 0};
  constexpr std::string_view prefix = "CLIiform:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string_view::npos)
      return {BuiltinCocycle::CLIiform, std::stoi(std::string(digits))};
  }
  throw Error(ErrorKind::SyntaxError, "unknown cocycle '" + std::string(text) + "'");
}

Scalar LinearFunctional::operator()(const BasisKey& k) const {
  auto it = values.find(k);
  return it == values.end() ? Scalar{} : it->second;
}

Scalar LinearFunctional::operator()(const Element& x) const {
  Scalar s;
  for (const auto& [k, c] : x.terms()) {
    auto it = values.find(k);
    if (it != values.end()) s += c * it->second;
  }
  return s;
}

bool LinearFunctional::is_zero() const {
  for (const auto& [k, v] : values)
    if (!v.is_zero()) return false;
  return true;
}

Cocycle Cocycle::linear_combination(std::vector<std::pair<Scalar, Cocycle>> terms) {
  Sum sum;
  for (auto& [c, form] : terms) sum.terms.emplace_back(c, std::make_shared<const Cocycle>(std::move(form)));
  return Cocycle(std::move(sum));
}

void check_gate(const AlgebraContext& ctx, BuiltinCocycle kind, int index) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::GateViolation, to_string(kind, index) + " requires " + what);
  };
  switch (kind) {
    case BuiltinCocycle::CLform:
      break;
    case BuiltinCocycle::CIform:
    case BuiltinCocycle::CLI0form:
      require(delta_lambda(ctx, 0), "lambda = 0");
      break;
    case BuiltinCocycle::CLI1form:
      require(delta_lambda(ctx, 1), "lambda = 1");
      break;
    case BuiltinCocycle::CLIiform:
      require(delta_lambda(ctx, -2), "lambda = -2");
      require(index >= 2 && index <= static_cast<int>(ctx.rank()), "an index 2 <= i <= rank");
      break;
    case BuiltinCocycle::PrimeCI:
    case BuiltinCocycle::PrimeCLI:
    case BuiltinCocycle::PrimeCLIprime:
      require(ctx.variant() == Variant::DerivedPrime, "the derived-prime algebra (lambda = -1)");
      break;
  }
}

namespace {

void require_noncentral(const AlgebraContext& ctx, const BasisKey& k) {
  validate(ctx, k);
  if (k.is_central()) throw Error(ErrorKind::VariantMismatch, "cocycles are evaluated on the centerless algebra, got " + to_string(k));
}

Scalar eval_builtin(const Cocycle::Builtin& b, const BasisKey& x, const BasisKey& y) {
  if (x.kind == KeyKind::I && y.kind == KeyKind::L) return -eval_builtin(b, y, x);
  if (!(x.degree + y.degree).is_zero()) return {};
  const Scalar a = value(x.degree);
  const bool ll = x.kind == KeyKind::L && y.kind == KeyKind::L;
  const bool li = x.kind == KeyKind::L && y.kind == KeyKind::I;
  const bool ii = x.kind == KeyKind::I && y.kind == KeyKind::I;
  switch (b.kind) {
    case BuiltinCocycle::CLform:
      return ll ? (a * a * a - a) * Scalar(Rational(1, 12)) : Scalar{};
    case BuiltinCocycle::CIform:
      return ii ? a : Scalar{};
    case BuiltinCocycle::CLI0form:
      return li ? a * a + a : Scalar{};
    case BuiltinCocycle::CLI1form:
      return li ? (a * a * a - a) * Scalar(Rational(1, 12)) : Scalar{};
    case BuiltinCocycle::CLIiform:
      return li ? Scalar(static_cast<long>(x.degree[static_cast<std::size_t>(b.index) - 1])) : Scalar{};
    case BuiltinCocycle::PrimeCI:
      return ii ? a.inverse() : Scalar{};
    case BuiltinCocycle::PrimeCLI:
      return li ? a : Scalar{};
    case BuiltinCocycle::PrimeCLIprime:
      return li ? Scalar(1L) : Scalar{};
  }
  return {};
}

}  // namespace

Scalar eval_cocycle(const AlgebraContext& ctx, const Cocycle& c, const BasisKey& x, const BasisKey& y) {
  require_noncentral(ctx, x);
  require_noncentral(ctx, y);
  return std::visit(
      [&](const auto& form) -> Scalar {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, Cocycle::Builtin>) {
          check_gate(ctx, form.kind, form.index);
          return eval_builtin(form, x, y);
        } else if constexpr (std::is_same_v<T, Cocycle::Coboundary>) {
          return form.f(bracket_centerless(ctx, x, y));
        } else if constexpr (std::is_same_v<T, Cocycle::Tabulated>) {
          if (!in_window(x.degree, form.radius) || !in_window(y.degree, form.radius))
            throw Error(ErrorKind::OutOfWindow, "(" + to_string(x) + ", " + to_string(y) + ") outside B_" + std::to_string(form.radius));
          if (x == y) return {};
          const bool swap = y < x;
          auto it = form.values.find(swap ? std::make_pair(y, x) : std::make_pair(x, y));
          if (it == form.values.end()) return {};
          return swap ? -it->second : it->second;
        } else {
          Scalar s;
          for (const auto& [coef, term] : form.terms) s += coef * eval_cocycle(ctx, *term, x, y);
          return s;
        }
      },
      c.form());
}

Scalar eval_cocycle(const AlgebraContext& ctx, const Cocycle& c, const Element& x, const Element& y) {
  Scalar s;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) s += cx * cy * eval_cocycle(ctx, c, kx, ky);
  return s;
}

Cocycle coboundary(const LinearFunctional& f) { return Cocycle(Cocycle::Coboundary{f}); }

Cocycle tabulate(const AlgebraContext& ctx, const Cocycle& c, int radius) {
  Cocycle::Tabulated table;
  table.radius = radius;
  const auto keys = window_keys(ctx, radius);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      const auto& [x, y] = keys[i] < keys[j] ? std::tie(keys[i], keys[j]) : std::tie(keys[j], keys[i]);
      Scalar v = eval_cocycle(ctx, c, x, y);
      if (!v.is_zero()) table.values.emplace(std::make_pair(x, y), std::move(v));
    }
  }
  return Cocycle(std::move(table));
}

CheckReport is_cocycle(const AlgebraContext& ctx, const Cocycle& c, int radius) {
  if (radius < 1) throw Error(ErrorKind::InvalidParams, "radius must be >= 1");
  CheckReport report;
  report.check = "cocycle";
  const auto keys = window_keys(ctx, radius);
  const std::size_t n = keys.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++report.cases;
      const Scalar xy = eval_cocycle(ctx, c, keys[i], keys[j]);
      const Scalar yx = eval_cocycle(ctx, c, keys[j], keys[i]);
      if (!(xy + yx).is_zero() || (i == j && !xy.is_zero()))
        report.fail("antisymmetry (" + to_string(keys[i]) + ", " + to_string(keys[j]) + "): " + to_string(xy) + " vs " + to_string(yx));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const GroupElem ab = keys[i].degree + keys[j].degree;
      if (!in_window(ab, radius)) continue;
      const Element xy = bracket_centerless(ctx, keys[i], keys[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!in_window(keys[j].degree + keys[k].degree, radius) || !in_window(keys[k].degree + keys[i].degree, radius))
          continue;
        ++report.cases;
        Scalar sum = eval_cocycle(ctx, c, xy, Element(keys[k]));
        sum += eval_cocycle(ctx, c, bracket_centerless(ctx, keys[j], keys[k]), Element(keys[i]));
        sum += eval_cocycle(ctx, c, bracket_centerless(ctx, keys[k], keys[i]), Element(keys[j]));
        if (!sum.is_zero())
          report.fail("cocycle (" + to_string(keys[i]) + ", " + to_string(keys[j]) + ", " + to_string(keys[k]) + "): " + to_string(sum));
      }
    }
  }
  return report;
}

NormalizedCocycle normalize_cocycle(const AlgebraContext& ctx, const Cocycle& c, int radius) {
  const bool prime = ctx.variant() == Variant::DerivedPrime;
  if (delta_lambda(ctx, -1) && !prime) throw Error(ErrorKind::LambdaMinusOne, "the gauge divides by lambda + 1");
  if (radius < 1) throw Error(ErrorKind::InvalidParams, "radius must be >= 1");
  const std::size_t n = ctx.rank();
  const BasisKey l0 = BasisKey::L(GroupElem::zero(n));
  const GroupElem e1 = GroupElem::unit(n, 1);

  LinearFunctional f;
  auto set = [&](const BasisKey& k, Scalar v) {
    if (!v.is_zero()) f.values.emplace(k, std::move(v));
  };
  for (const auto& a : window(n, radius)) {
    if (a.is_zero()) continue;
    const Scalar inv = value(a).inverse();
    set(BasisKey::L(a), eval_cocycle(ctx, c, l0, BasisKey::L(a)) * inv);
    set(BasisKey::I(a), eval_cocycle(ctx, c, l0, BasisKey::I(a)) * inv);
  }
  set(l0, eval_cocycle(ctx, c, BasisKey::L(-e1), BasisKey::L(e1)) * Scalar(Rational(1, 2)));
  if (!prime)  // I(0) is not in g'
    set(BasisKey::I(GroupElem::zero(n)),
        eval_cocycle(ctx, c, BasisKey::L(-e1), BasisKey::I(e1)) / Scalar(ctx.lambda() + 1));

  Cocycle normalized = Cocycle::linear_combination({{Scalar(1L), c}, {Scalar(-1L), coboundary(f)}});
  return {std::move(normalized), std::move(f)};
}

std::vector<std::pair<BasisKey, Cocycle>> extension_cocycles(const AlgebraContext& ctx) {
  std::vector<std::pair<BasisKey, Cocycle>> out;
  if (ctx.variant() == Variant::DerivedPrime) {
    out.emplace_back(BasisKey::CL(), Cocycle::builtin(BuiltinCocycle::CLform));
    out.emplace_back(BasisKey::CI(), Cocycle::builtin(BuiltinCocycle::PrimeCI));
    out.emplace_back(BasisKey::CLI(0), Cocycle::builtin(BuiltinCocycle::PrimeCLI));
    out.emplace_back(BasisKey::CLIprime(), Cocycle::builtin(BuiltinCocycle::PrimeCLIprime));
    return out;
  }
  out.emplace_back(BasisKey::CL(), Cocycle::builtin(BuiltinCocycle::CLform));
  if (delta_lambda(ctx, 0)) {
    out.emplace_back(BasisKey::CI(), Cocycle::builtin(BuiltinCocycle::CIform));
    out.emplace_back(BasisKey::CLI(0), Cocycle::builtin(BuiltinCocycle::CLI0form));
  } else if (delta_lambda(ctx, 1)) {
    out.emplace_back(BasisKey::CLI(1), Cocycle::builtin(BuiltinCocycle::CLI1form));
  } else if (delta_lambda(ctx, -2)) {
    for (int i = 2; i <= static_cast<int>(ctx.rank()); ++i)
      out.emplace_back(BasisKey::CLI(i), Cocycle::builtin(BuiltinCocycle::CLIiform, i));
  }
  return out;
}

}  // namespace hv
