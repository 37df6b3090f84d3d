#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/report.hpp"

namespace hv {

/// The classified 2-cocycles, with the normalizations of the extension
/// brackets (e.g. the 1/12 in CLform). CLIiform carries its index 2..n.
enum class BuiltinCocycle { CLform, CIform, CLI0form, CLI1form, CLIiform, PrimeCI, PrimeCLI, PrimeCLIprime };

std::string to_string(BuiltinCocycle kind, int index = 0);
/// Accepts the names above; `CLIiform:2` selects the index.
std::pair<BuiltinCocycle, int> parse_builtin_cocycle(std::string_view text);

/// Finitely supported linear functional; keys not listed evaluate to zero.
struct LinearFunctional {
  std::map<BasisKey, Scalar> values;

  Scalar operator()(const BasisKey& k) const;
  Scalar operator()(const Element& x) const;
  bool is_zero() const;
};

/// Bilinear antisymmetric form on the centerless algebra.
class Cocycle {
 public:
  struct Builtin {
    BuiltinCocycle kind;
    int index = 0;
  };
  struct Coboundary {
    LinearFunctional f;
  };
  /// Values on the canonical pairs (x < y) of the keys in B_radius; absent
  /// pairs are zero, pairs outside the window raise OutOfWindow.
  struct Tabulated {
    int radius = 0;
    std::map<std::pair<BasisKey, BasisKey>, Scalar> values;
  };
  struct Sum {
    std::vector<std::pair<Scalar, std::shared_ptr<const Cocycle>>> terms;
  };
  using Form = std::variant<Builtin, Coboundary, Tabulated, Sum>;

  explicit Cocycle(Form form) : form_(std::move(form)) {}

  static Cocycle builtin(BuiltinCocycle kind, int index = 0) { return Cocycle(Builtin{kind, index}); }
  static Cocycle linear_combination(std::vector<std::pair<Scalar, Cocycle>> terms);

  const Form& form() const { return form_; }

 private:
  Form form_;
};

/// Throws GateViolation unless the builtin exists for ctx.
void check_gate(const AlgebraContext& ctx, BuiltinCocycle kind, int index = 0);

Scalar eval_cocycle(const AlgebraContext& ctx, const Cocycle& c, const BasisKey& x, const BasisKey& y);
Scalar eval_cocycle(const AlgebraContext& ctx, const Cocycle& c, const Element& x, const Element& y);

/// (x, y) -> f([x, y]) with the centerless bracket.
Cocycle coboundary(const LinearFunctional& f);

/// Tables c on every pair of window keys.
Cocycle tabulate(const AlgebraContext& ctx, const Cocycle& c, int radius);

/// Antisymmetry on all pairs of keys in B_R and the cocycle identity on all
/// triples whose degrees and pairwise sums stay in B_R.
CheckReport is_cocycle(const AlgebraContext& ctx, const Cocycle& c, int radius);

struct NormalizedCocycle {
  Cocycle cocycle;           // c - phi_f
  LinearFunctional gauge;    // f, supported on B_R
};

/// Subtracts the coboundary of the gauge functional built from c(L_0, .),
/// c(L_-1, L_1) and c(L_-1, I_1). In g' there is no I(0) and the last value
/// is not needed; LambdaMinusOne for lambda = -1 otherwise.
NormalizedCocycle normalize_cocycle(const AlgebraContext& ctx, const Cocycle& c, int radius);

/// Central generator of the extension paired with the builtin cocycle that
/// produces its coefficient in the bracket.
std::vector<std::pair<BasisKey, Cocycle>> extension_cocycles(const AlgebraContext& ctx);

}  // namespace hv
