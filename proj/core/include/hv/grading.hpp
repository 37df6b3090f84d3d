#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hv/rational.hpp"
#include "hv/scalar.hpp"

namespace hv {

/// Largest supported rank: e2, ..., e9.
inline constexpr std::size_t kMaxRank = kMaxIndeterminates + 1;

/// Element a = a1*eps1 + ... + an*epsn of the free grading group G, stored as
/// its integer coordinates in the basis eps1 = 1, eps2, ..., epsn.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(std::span<const int> coords);
  GroupElem(std::initializer_list<int> coords);

  static GroupElem zero(std::size_t rank);
  /// The basis vector eps_i, 1 <= i <= rank.
  static GroupElem unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return rank_; }
  /// Coordinate a_{i+1}.
  int operator[](std::size_t i) const { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), rank_}; }

  bool is_zero() const;
  /// max_i |a_i|
  int norm() const;

  GroupElem operator+(const GroupElem& o) const;
  GroupElem operator-(const GroupElem& o) const;
  GroupElem operator-() const;
  GroupElem operator*(int k) const;

  bool operator==(const GroupElem& o) const;
  std::strong_ordering operator<=>(const GroupElem& o) const;

 private:
  void check_rank(const GroupElem& o) const;
  std::array<int, kMaxRank> c_{};
  std::size_t rank_ = 0;
};

/// a1 + a2*e2 + ... + an*en
Scalar value(const GroupElem& a);

/// Exact value at a rational specialization of e2, ..., en.
Rational value_at(const GroupElem& a, std::span<const Rational> assignment);

/// `[a1,...,an]`
std::string to_string(const GroupElem& a);

inline bool in_window(const GroupElem& a, int radius) { return a.norm() <= radius; }

/// B_R = {a : |a_i| <= R}, in lexicographic order of coordinates.
std::vector<GroupElem> window(std::size_t rank, int radius);

enum class Variant { Plain, Extended, DerivedPrime };

const char* to_string(Variant v);
/// `plain`, `extended`, `derived-prime`
Variant parse_variant(std::string_view text);

/// Rank, deformation parameter and which algebra (g, its universal central
/// extension, or the extension of g' at lambda = -1) is in play.
class AlgebraContext {
 public:
  /// Throws InvalidContext when Extended has lambda = -1 or DerivedPrime has
  /// lambda != -1; RankTooLarge/InvalidContext for a bad rank.
  AlgebraContext(std::size_t rank, Rational lambda, Variant variant = Variant::Plain);

  std::size_t rank() const { return rank_; }
  const Rational& lambda() const { return lambda_; }
  Variant variant() const { return variant_; }

  /// Same rank and lambda, different variant (validated again).
  AlgebraContext with_variant(Variant v) const { return {rank_, lambda_, v}; }

  bool operator==(const AlgebraContext&) const = default;

 private:
  std::size_t rank_;
  Rational lambda_;
  Variant variant_;
};

/// Exact test lambda == c.
inline bool delta_lambda(const AlgebraContext& ctx, const Rational& c) { return ctx.lambda() == c; }

}  // namespace hv
