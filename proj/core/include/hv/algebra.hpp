#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hv/grading.hpp"
#include "hv/report.hpp"
#include "hv/scalar.hpp"

namespace hv {

enum class KeyKind : std::uint8_t { L, I, CL, CI, CLI, CLIprime };

/// Basis symbol: L(a), I(a) or one of the central generators. CLI(i) is
/// C_LI^(i) of the extension (0 <= i <= n); in the derived-prime algebra the
/// generator C_LI is stored as CLI(0) and C_LI' as CLIprime.
struct BasisKey {
  KeyKind kind = KeyKind::L;
  GroupElem degree;
  int index = 0;

  static BasisKey L(const GroupElem& a) { return {KeyKind::L, a, 0}; }
  static BasisKey I(const GroupElem& a) { return {KeyKind::I, a, 0}; }
  static BasisKey CL() { return {KeyKind::CL, {}, 0}; }
  static BasisKey CI() { return {KeyKind::CI, {}, 0}; }
  static BasisKey CLI(int i) { return {KeyKind::CLI, {}, i}; }
  static BasisKey CLIprime() { return {KeyKind::CLIprime, {}, 0}; }

  bool is_central() const { return kind != KeyKind::L && kind != KeyKind::I; }

  bool operator==(const BasisKey&) const = default;
  std::strong_ordering operator<=>(const BasisKey& o) const;
};

std::string to_string(const BasisKey& k);

/// Finite linear combination of basis keys with nonzero Scalar coefficients.
class Element {
 public:
  using Map = std::map<BasisKey, Scalar>;

  Element() = default;
  Element(const BasisKey& k, const Scalar& c = Scalar(1L));  // NOLINT(google-explicit-constructor)

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const BasisKey& k) const;

  /// Adds c*k, dropping the entry when it cancels.
  void add(const BasisKey& k, const Scalar& c);
  void add(const Element& x, const Scalar& c = Scalar(1L));

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o) {
    add(o);
    return *this;
  }

  bool operator==(const Element&) const = default;

 private:
  Map terms_;
};

Element operator*(const Scalar& c, const Element& x);

/// `-1*I[0] + 2*CLI0`; zero prints as `0`.
std::string to_string(const Element& x);

/// Central generators active in the context: none for g; C_L plus the
/// lambda-gated charges for the extension; C_L, C_I, C_LI, C_LI' for g'.
std::vector<BasisKey> central_keys(const AlgebraContext& ctx);

bool is_valid_key(const AlgebraContext& ctx, const BasisKey& k);
/// Throws InactiveCentralKey, VariantMismatch (I(0) in g') or RankMismatch.
void validate(const AlgebraContext& ctx, const BasisKey& k);
void validate(const AlgebraContext& ctx, const Element& x);

/// L(a), I(a) for a in B_R (I(0) omitted in g'), optionally followed by the
/// active central keys.
std::vector<BasisKey> window_keys(const AlgebraContext& ctx, int radius, bool with_center = false);

/// Bracket of two basis keys, central terms included for the extended and
/// derived-prime variants.
Element bracket(const AlgebraContext& ctx, const BasisKey& x, const BasisKey& y);
Element bracket(const AlgebraContext& ctx, const Element& x, const Element& y);

/// Bracket of the centerless algebra underneath ctx (g, or g' without charges).
Element bracket_centerless(const AlgebraContext& ctx, const BasisKey& x, const BasisKey& y);
Element bracket_centerless(const AlgebraContext& ctx, const Element& x, const Element& y);

Element drop_center(const Element& x);

/// Linear map given on basis keys.
using BasisMap = std::function<Element(const BasisKey&)>;

Element apply_linear(const BasisMap& m, const Element& x);

/// Checks antisymmetry on all pairs and the Jacobi identity on all triples of
/// window keys (central keys included).
CheckReport jacobi_check(const AlgebraContext& ctx, int radius);

}  // namespace hv
