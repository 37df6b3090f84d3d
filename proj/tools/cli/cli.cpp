#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hv/errors.hpp"
#include "hv/oracle.hpp"
#include "hv/parse.hpp"

namespace hv::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

// Splits at commas that are not nested in brackets or parentheses.
std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

[[noreturn]] void bad_descriptor(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::SyntaxError, "derivation '" + std::string(text) + "': " + why);
}

AddHom hom_arg(const std::string& s) { return AddHom{parse_scalar_list(s)}; }

}  // namespace

DerivationDescriptor parse_derivation(std::string_view text) {
  using D = DerivationDescriptor;
  const std::string t = trim(text);
  const auto open = t.find('(');
  const std::string name = trim(t.substr(0, open));
  std::vector<std::string> args;
  if (open != std::string::npos) {
    if (t.back() != ')') bad_descriptor(text, "missing ')'");
    args = split_args(std::string_view(t).substr(open + 1, t.size() - open - 2));
  }
  auto arity = [&](std::size_t n) {
    if (args.size() != n) bad_descriptor(text, "expected " + std::to_string(n) + " argument(s)");
  };

  if (name == "phi") return arity(0), D::simple(D::Kind::Phi);
  if (name == "psi") return arity(0), D::simple(D::Kind::Psi);
  if (name == "sigma0") return arity(0), D::simple(D::Kind::Sigma0);
  if (name == "sigma-1") return arity(0), D::simple(D::Kind::SigmaM1);
  if (name == "sigma-2") return arity(0), D::simple(D::Kind::SigmaM2);
  if (name == "phibar") return arity(0), D::simple(D::Kind::LiftPhiBar);
  if (name == "sigma0bar") return arity(0), D::simple(D::Kind::LiftSigma0Bar);
  if (name == "xi") return arity(1), D::xi(hom_arg(args[0]));
  if (name == "eta1") return arity(1), D::eta1(hom_arg(args[0]));
  if (name == "adL") return arity(1), D::ad_L(parse_group_elem(args[0]));
  if (name == "adI") return arity(1), D::ad_I(parse_group_elem(args[0]));
  if (name == "lifted") return arity(1), D::lifted(parse_derivation(args[0]));
  if (name == "xibar") return arity(3), D::xi_bar(hom_arg(args[0]), parse_scalar(args[1]), parse_scalar(args[2]));
  if (name == "psibar") return arity(2), D::psi_bar(parse_scalar(args[0]), parse_scalar(args[1]));
  bad_descriptor(text, "unknown name '" + name + "'");
}

namespace {

Scalar json_scalar(const Json& v, const char* field) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw Error(ErrorKind::InvalidParams, std::string("field '") + field + "' must be a string or an integer");
}

std::vector<Scalar> json_scalars(const Json& v, std::size_t rank, const char* field) {
  if (!v.is_array() || v.size() != rank)
    throw Error(ErrorKind::InvalidParams, std::string("field '") + field + "' must be a list of " + std::to_string(rank) + " scalars");
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(json_scalar(x, field));
  return out;
}

long json_int(const Json& v) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  }
  throw Error(ErrorKind::InvalidParams, "matrix entries must be integers");
}

}  // namespace

AutParams parse_aut_params(std::size_t rank, std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("automorphism parameters: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::SyntaxError, "automorphism parameters must be a JSON object");
  static const char* kFields[] = {"xi", "matrix", "chi", "f", "l", "l0", "l1", "l2", "l3"};
  for (const auto& [key, value] : j.items())
    if (std::none_of(std::begin(kFields), std::end(kFields), [&](const char* f) { return key == f; }))
      throw Error(ErrorKind::InvalidParams, "unknown automorphism field '" + key + "'");

  AutParams p = AutParams::identity(rank);
  if (j.contains("xi") || j.contains("matrix")) {
    Scalar u = j.contains("xi") ? json_scalar(j["xi"], "xi") : Scalar(1L);
    IntMatrix m = identity_matrix(rank);
    if (j.contains("matrix")) {
      const Json& jm = j["matrix"];
      if (!jm.is_array() || jm.size() != rank) throw Error(ErrorKind::InvalidParams, "matrix must have " + std::to_string(rank) + " rows");
      for (std::size_t r = 0; r < rank; ++r) {
        if (!jm[r].is_array() || jm[r].size() != rank) throw Error(ErrorKind::InvalidParams, "matrix rows must have " + std::to_string(rank) + " entries");
        for (std::size_t c = 0; c < rank; ++c) m[r][c] = json_int(jm[r][c]);
      }
    } else if (u.is_rational() && (u.to_rational() == -1)) {
      m = ScaleUnit::negation(rank).matrix();
    }
    p.xi = ScaleUnit(std::move(u), std::move(m));
  }
  if (j.contains("chi")) p.chi = Character(json_scalars(j["chi"], rank, "chi"));
  if (j.contains("f")) p.f = AddHom{json_scalars(j["f"], rank, "f")};
  if (j.contains("l")) p.l = json_scalar(j["l"], "l");
  if (j.contains("l0")) p.l0 = json_scalar(j["l0"], "l0");
  if (j.contains("l1")) p.l1 = json_scalar(j["l1"], "l1");
  if (j.contains("l2")) p.l2 = json_scalar(j["l2"], "l2");
  if (j.contains("l3")) p.l3 = json_scalar(j["l3"], "l3");
  return p;
}

namespace {

Json scalars_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

Json unit_json(const ScaleUnit& u, Json& matrix) {
  matrix = Json::array();
  for (const auto& row : u.matrix()) {
    Json r = Json::array();
    for (long x : row) r.push_back(std::to_string(x));
    matrix.push_back(r);
  }
  return to_string(u.u());
}

Json params_object(const AutParams& p) {
  Json j;
  Json matrix;
  j["xi"] = unit_json(p.xi, matrix);
  j["matrix"] = matrix;
  j["chi"] = scalars_json(p.chi.values());
  j["f"] = scalars_json(p.f.values);
  j["l"] = to_string(p.l);
  j["l0"] = to_string(p.l0);
  j["l1"] = to_string(p.l1);
  j["l2"] = to_string(p.l2);
  j["l3"] = to_string(p.l3);
  return j;
}

}  // namespace

std::string aut_params_json(const AutParams& p) { return params_object(p).dump(); }

namespace {

struct Options {
  std::size_t rank = 1;
  std::string lambda = "0";
  std::string variant = "plain";
  int radius = 0;
  std::vector<std::uint64_t> seeds;
  bool timing = false;

  std::vector<std::string> operands;
  std::string der;
  std::string aut;
  std::string inner;
  std::string lift;
  std::string cocycle;
  std::string functional;
  std::string degree;
};

struct Outcome {
  Json params = Json::object();
  Json result;
  std::vector<std::string> failures;
};

using Handler = std::function<Outcome(const AlgebraContext&, const Options&)>;

Json check_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["passed"] = r.passed();
  j["cases"] = std::to_string(r.cases);
  j["failure_count"] = std::to_string(r.failure_count);
  return j;
}

void take_failures(Outcome& o, const CheckReport& r) {
  for (const auto& f : r.failures) o.failures.push_back(f);
  if (r.failure_count > r.failures.size())
    o.failures.push_back("... " + std::to_string(r.failure_count - r.failures.size()) + " more");
}

Json seeds_json(const std::vector<std::uint64_t>& seeds) {
  Json a = Json::array();
  for (auto s : seeds) a.push_back(std::to_string(s));
  return a;
}

Cocycle cocycle_operand(const AlgebraContext& ctx, const Options& o, Json& params) {
  if (o.cocycle.empty() == o.functional.empty())
    throw Error(ErrorKind::InvalidParams, "give exactly one of --cocycle NAME or --functional ELEMENT");
  if (!o.cocycle.empty()) {
    const auto [kind, index] = parse_builtin_cocycle(o.cocycle);
    check_gate(ctx, kind, index);
    params["cocycle"] = to_string(kind, index);
    return Cocycle::builtin(kind, index);
  }
  const Element f = parse_element(ctx, o.functional);
  LinearFunctional lf;
  for (const auto& [k, c] : f.terms()) {
    if (k.is_central()) throw Error(ErrorKind::VariantMismatch, "functionals live on the centerless algebra");
    lf.values.emplace(k, c);
  }
  params["functional"] = to_string(f);
  return coboundary(lf);
}

Outcome cmd_bracket(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 2) throw Error(ErrorKind::InvalidParams, "bracket takes two elements");
  const Element x = parse_element(ctx, o.operands[0]);
  const Element y = parse_element(ctx, o.operands[1]);
  Outcome out;
  out.params["x"] = to_string(x);
  out.params["y"] = to_string(y);
  out.result = to_string(bracket(ctx, x, y));
  return out;
}

Outcome cmd_jacobi(const AlgebraContext& ctx, const Options& o) {
  Outcome out;
  out.params["radius"] = std::to_string(o.radius);
  const CheckReport r = jacobi_check(ctx, o.radius);
  out.result = check_json(r);
  take_failures(out, r);
  return out;
}

Outcome cmd_cocycle_check(const AlgebraContext& ctx, const Options& o) {
  Outcome out;
  const Cocycle c = cocycle_operand(ctx, o, out.params);
  out.params["radius"] = std::to_string(o.radius);
  const CheckReport r = is_cocycle(ctx, c, o.radius);
  out.result = check_json(r);
  take_failures(out, r);
  return out;
}

Outcome cmd_cocycle_normalize(const AlgebraContext& ctx, const Options& o) {
  Outcome out;
  const Cocycle c = cocycle_operand(ctx, o, out.params);
  out.params["radius"] = std::to_string(o.radius);
  const NormalizedCocycle n = normalize_cocycle(ctx, c, o.radius);
  Json gauge = Json::object();
  for (const auto& [k, v] : n.gauge.values) gauge[to_string(k)] = to_string(v);
  // Values of the normalized form on window pairs whose bracket stays in the window.
  Json residual = Json::array();
  const auto keys = window_keys(ctx, o.radius);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      if (!in_window(keys[i].degree + keys[j].degree, o.radius)) continue;
      const Scalar v = eval_cocycle(ctx, n.cocycle, keys[i], keys[j]);
      if (v.is_zero()) continue;
      Json e;
      e["x"] = to_string(keys[i]);
      e["y"] = to_string(keys[j]);
      e["value"] = to_string(v);
      residual.push_back(e);
    }
  }
  out.result["gauge"] = gauge;
  out.result["vanishes"] = residual.empty();
  out.result["residual"] = residual;
  return out;
}

Outcome cmd_der_apply(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 1) throw Error(ErrorKind::InvalidParams, "der-apply takes one element");
  const DerivationDescriptor d = parse_derivation(o.der);
  const Element x = parse_element(ctx, o.operands[0]);
  Outcome out;
  out.params["der"] = to_string(d);
  out.params["x"] = to_string(x);
  out.result = to_string(der_apply(ctx, d, x));
  return out;
}

Outcome cmd_leibniz(const AlgebraContext& ctx, const Options& o) {
  const DerivationDescriptor d = parse_derivation(o.der);
  Outcome out;
  out.params["der"] = to_string(d);
  out.params["radius"] = std::to_string(o.radius);
  const CheckReport r = leibniz_check(ctx, d, o.radius);
  out.result = check_json(r);
  take_failures(out, r);
  return out;
}

AutParams aut_operand(const AlgebraContext& ctx, const std::string& text) {
  AutParams p = parse_aut_params(ctx.rank(), text);
  validate(ctx, p);
  return p;
}

Outcome cmd_aut_apply(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 1) throw Error(ErrorKind::InvalidParams, "aut-apply takes one element");
  const AutParams p = aut_operand(ctx, o.aut);
  const Element x = parse_element(ctx, o.operands[0]);
  Outcome out;
  out.params["aut"] = params_object(p);
  out.params["x"] = to_string(x);
  out.result = to_string(aut_apply(ctx, p, x));
  return out;
}

Outcome cmd_lift_apply(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 1) throw Error(ErrorKind::InvalidParams, "lift-apply takes one element");
  const AutParams p = parse_aut_params(ctx.rank(), o.aut);
  const Element x = parse_element(ctx, o.operands[0]);
  Outcome out;
  out.params["aut"] = params_object(p);
  out.params["x"] = to_string(x);
  out.result = to_string(aut_lift_apply(ctx, p, x));
  return out;
}

// Formula composition against pointwise composition on the window.
void pointwise_compare(const AlgebraContext& ctx, const AutParams& outer, const AutParams& inner, const AutParams& formula,
                       int radius, Outcome& out) {
  std::size_t cases = 0;
  for (const auto& k : window_keys(ctx, radius)) {
    ++cases;
    const Element lhs = aut_apply(ctx, formula, k);
    const Element rhs = aut_apply(ctx, outer, aut_apply(ctx, inner, k));
    if (!(lhs == rhs)) out.failures.push_back("composition differs at " + to_string(k) + ": " + to_string(lhs - rhs));
  }
  out.result["pointwise_cases"] = std::to_string(cases);
}

Outcome cmd_aut_compose(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 2) throw Error(ErrorKind::InvalidParams, "aut-compose takes two parameter objects (outer, inner)");
  const AutParams outer = aut_operand(ctx, o.operands[0]);
  const AutParams inner = aut_operand(ctx, o.operands[1]);
  const AutParams c = aut_compose(outer, inner);
  Outcome out;
  out.params["outer"] = params_object(outer);
  out.params["inner"] = params_object(inner);
  out.params["radius"] = std::to_string(o.radius);
  out.result["composite"] = params_object(c);
  pointwise_compare(ctx, outer, inner, c, o.radius, out);
  return out;
}

Outcome cmd_aut_inverse(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 1) throw Error(ErrorKind::InvalidParams, "aut-inverse takes one parameter object");
  const AutParams p = aut_operand(ctx, o.operands[0]);
  const AutParams inv = aut_inverse(p);
  Outcome out;
  out.params["aut"] = params_object(p);
  out.result["inverse"] = params_object(inv);
  if (!(aut_compose(p, inv) == AutParams::identity(ctx.rank())))
    out.failures.push_back("theta * inverse(theta) is not the identity");
  if (!(aut_compose(inv, p) == AutParams::identity(ctx.rank())))
    out.failures.push_back("inverse(theta) * theta is not the identity");
  return out;
}

Outcome cmd_aut_factor(const AlgebraContext& ctx, const Options& o) {
  if (o.operands.size() != 1) throw Error(ErrorKind::InvalidParams, "aut-factor takes one parameter object");
  const AutParams p = aut_operand(ctx, o.operands[0]);
  const AutFactors f = aut_factor(p);
  Outcome out;
  out.params["aut"] = params_object(p);
  Json t;
  Json matrix;
  t["xi"] = unit_json(f.t, matrix);
  t["matrix"] = matrix;
  out.result["t"] = t;
  out.result["n"] = scalars_json(f.n.values());
  out.result["s"] = to_string(f.s);
  out.result["k"] = params_object(f.k);
  if (!(f.recompose() == p)) out.failures.push_back("factors do not recompose to theta");
  return out;
}

Outcome cmd_hom_check(const AlgebraContext& ctx, const Options& o) {
  const int given = !o.aut.empty() + !o.inner.empty() + !o.lift.empty() + !o.der.empty();
  if (given != 1) throw Error(ErrorKind::InvalidParams, "give exactly one of --aut, --inner, --lift, --der");
  Outcome out;
  out.params["radius"] = std::to_string(o.radius);
  BasisMap m;
  if (!o.aut.empty()) {
    const AutParams p = aut_operand(ctx, o.aut);
    out.params["aut"] = params_object(p);
    (void)aut_apply(ctx, p, Element{});
    m = [&ctx, p](const BasisKey& k) { return aut_apply(ctx, p, k); };
  } else if (!o.inner.empty()) {
    const InnerAut u{parse_element(ctx, o.inner)};
    out.params["inner"] = to_string(u.u);
    (void)inner_apply(ctx, u, Element{});
    m = [&ctx, u](const BasisKey& k) { return inner_apply(ctx, u, Element(k)); };
  } else if (!o.der.empty()) {
    const DerivationDescriptor d = parse_derivation(o.der);
    check_gate(ctx, d);
    out.params["der"] = to_string(d);
    m = [&ctx, d](const BasisKey& k) { return der_apply(ctx, d, k); };
  } else {
    const AutParams p = parse_aut_params(ctx.rank(), o.lift);
    out.params["lift"] = params_object(p);
    (void)aut_lift_apply(ctx, p, Element{});
    m = [&ctx, p](const BasisKey& k) { return aut_lift_apply(ctx, p, k); };
  }
  const CheckReport r = hom_check(ctx, m, o.radius);
  out.result = check_json(r);
  take_failures(out, r);
  return out;
}

Json runs_json(const DimReport& d) {
  Json runs = Json::array();
  for (const auto& r : d.runs) {
    Json e;
    e["radius"] = std::to_string(r.radius);
    e["seed"] = std::to_string(r.seed);
    e["quotient_dim"] = std::to_string(r.quotient_dim);
    runs.push_back(e);
  }
  return runs;
}

Outcome cmd_h2_dim(const AlgebraContext& ctx, const Options& o) {
  Outcome out;
  out.params["radius"] = std::to_string(o.radius);
  out.params["seeds"] = seeds_json(o.seeds);
  try {
    const DimReport d = h2_dimension(ctx, o.radius, o.seeds);
    out.result["dimension"] = std::to_string(d.quotient_dim);
    out.result["stable"] = d.stable;
    out.result["cocycle_dim"] = std::to_string(d.cocycle_dim);
    out.result["coboundary_dim"] = std::to_string(d.coboundary_dim);
    out.result["runs"] = runs_json(d);
    const CheckReport b = h2_builtin_check(ctx, o.radius, o.seeds.front());
    out.result["builtins"] = check_json(b);
    take_failures(out, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnstableTruncation) throw;
    out.result["stable"] = false;
    out.failures.push_back(e.what());
  }
  return out;
}

Outcome cmd_der_dim(const AlgebraContext& ctx, const Options& o) {
  Outcome out;
  const GroupElem degree = o.degree.empty() ? GroupElem::zero(ctx.rank()) : parse_group_elem(o.degree);
  if (degree.rank() != ctx.rank()) throw Error(ErrorKind::RankMismatch, "degree " + to_string(degree) + " in a rank-" + std::to_string(ctx.rank()) + " algebra");
  out.params["degree"] = to_string(degree);
  out.params["radius"] = std::to_string(o.radius);
  out.params["seeds"] = seeds_json(o.seeds);
  try {
    const DimReport d = der_dimension(ctx, degree, o.radius, o.seeds);
    out.result["dimension"] = std::to_string(d.quotient_dim);
    out.result["stable"] = d.stable;
    out.result["runs"] = runs_json(d);
    const CheckReport f = der_family_check(ctx, degree, o.radius, o.seeds.front());
    out.result["families"] = check_json(f);
    take_failures(out, f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnstableTruncation) throw;
    out.result["stable"] = false;
    out.failures.push_back(e.what());
  }
  return out;
}

struct Command {
  const char* name;
  const char* help;
  int default_radius;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> kCommands = {
      {"bracket", "Bracket of two elements", 3, cmd_bracket},
      {"jacobi", "Antisymmetry and Jacobi identity on the window", 3, cmd_jacobi},
      {"cocycle-check", "Cocycle identity for a builtin cocycle or a coboundary", 3, cmd_cocycle_check},
      {"cocycle-normalize", "Gauge-normalize a cocycle on the window", 3, cmd_cocycle_normalize},
      {"der-apply", "Apply a derivation to an element", 3, cmd_der_apply},
      {"leibniz", "Leibniz rule for a derivation on the window", 3, cmd_leibniz},
      {"aut-apply", "Apply an outer automorphism to an element", 3, cmd_aut_apply},
      {"aut-compose", "Compose two automorphisms by formula and compare pointwise", 3, cmd_aut_compose},
      {"aut-inverse", "Inverse of an automorphism by formula", 3, cmd_aut_inverse},
      {"aut-factor", "Factor an automorphism into T, N, S, K parts", 3, cmd_aut_factor},
      {"hom-check", "Homomorphism property of a linear map on the window", 3, cmd_hom_check},
      {"lift-apply", "Apply the lift of an automorphism to the central extension", 3, cmd_lift_apply},
      {"h2-dim", "dim H^2 on a window by exact linear algebra", 5, cmd_h2_dim},
      {"der-dim", "Dimension of the degree-d derivation space on a window", 5, cmd_der_dim},
  };
  return kCommands;
}

void add_options(CLI::App& sub, const Command& c, Options& o) {
  sub.add_option("--rank", o.rank, "Rank n of the grading group")->check(CLI::Range(std::size_t{1}, kMaxRank));
  sub.add_option("--lambda", o.lambda, "Deformation parameter p/q");
  sub.add_option("--variant", o.variant, "plain | extended | derived-prime");
  sub.add_option("--radius", o.radius, "Window radius R")->default_val(c.default_radius);
  sub.add_option("--seed", o.seeds, "Specialization seed (repeatable)");
  sub.add_flag("--timing", o.timing, "Report wall time in timing_ms");
  const std::string name = c.name;
  if (name == "der-apply" || name == "leibniz") sub.add_option("--der", o.der, "Derivation descriptor")->required();
  if (name == "aut-apply" || name == "lift-apply") sub.add_option("--aut", o.aut, "Automorphism parameters (JSON)")->required();
  if (name == "hom-check") {
    sub.add_option("--aut", o.aut, "Automorphism parameters (JSON)");
    sub.add_option("--inner", o.inner, "Element u of the I-span for exp(ad u)");
    sub.add_option("--lift", o.lift, "Automorphism parameters (JSON), lifted to the extension");
    sub.add_option("--der", o.der, "Derivation descriptor (its linear map)");
  }
  if (name == "cocycle-check" || name == "cocycle-normalize") {
    sub.add_option("--cocycle", o.cocycle, "Builtin cocycle name");
    sub.add_option("--functional", o.functional, "Coboundary of the functional given as an element");
  }
  if (name == "der-dim") sub.add_option("--degree", o.degree, "Degree [a1,...,an]");
  sub.add_option("operands", o.operands, "Elements or parameter objects");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in deformed higher-rank Heisenberg-Virasoro algebras", "hv"};
  app.require_subcommand(1);
  Options opts;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_options(*sub, c, opts);
    subs.emplace_back(sub, &c);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "hv: " << e.what() << "\n";
    return kExitUsage;
  }

  const Command* cmd = nullptr;
  for (const auto& [sub, c] : subs)
    if (sub->parsed()) cmd = c;
  if (opts.seeds.empty()) opts.seeds = default_seeds();

  Json report;
  report["schema"] = "hv-report/1";
  report["command"] = cmd->name;
  report["ctx"] = nullptr;
  report["params"] = Json::object();
  report["result"] = nullptr;
  report["failures"] = Json::array();
  report["timing_ms"] = nullptr;

  const auto start = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    const AlgebraContext ctx(opts.rank, parse_rational(opts.lambda), parse_variant(opts.variant));
    report["ctx"] = Json{{"rank", std::to_string(ctx.rank())}, {"lambda", to_string(ctx.lambda())}, {"variant", to_string(ctx.variant())}};
    Outcome o = cmd->handler(ctx, opts);
    report["params"] = std::move(o.params);
    report["result"] = std::move(o.result);
    for (auto& f : o.failures) report["failures"].push_back(std::move(f));
    if (!o.failures.empty()) code = kExitCheckFailed;
  } catch (const Error& e) {
    report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    code = kExitUsage;
  }
  if (opts.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report["timing_ms"] = std::to_string(ms);
  }
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace hv::cli
