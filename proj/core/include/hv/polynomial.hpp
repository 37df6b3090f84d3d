#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

/// Number of indeterminates e2, ..., e9 a polynomial may mention.
inline constexpr std::size_t kMaxIndeterminates = 8;

/// Exponent vector over the indeterminates. Slot 0 is e2, slot 1 is e3, ...
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t slot, std::uint16_t power = 1);

  std::uint16_t operator[](std::size_t slot) const { return exps_[slot]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  /// One past the highest slot with a nonzero exponent.
  std::size_t span() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// `other / *this`; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(std::size_t slot) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint16_t, kMaxIndeterminates> exps_{};
};

/// Graded lexicographic order with e2 < e3 < ... : total degree first, then the
/// exponent of the highest indeterminate decides. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Sparse polynomial in e2, e3, ... with rational coefficients. Terms are kept
/// sorted by descending grlex order and never carry a zero coefficient.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// The indeterminate e_{slot+2}.
  static Polynomial variable(std::size_t slot);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// Value of a constant polynomial.
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  std::size_t span() const;

  unsigned degree_in(std::size_t slot) const;
  /// Coefficients c_k (free of the slot variable) with *this = sum c_k x^k.
  std::vector<Polynomial> coefficients_in(std::size_t slot) const;
  static Polynomial from_coefficients(std::span<const Polynomial> coeffs, std::size_t slot);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned k) const;

  /// Evaluates at e_{i+2} = values[i]. Throws RankMismatch when a mentioned
  /// indeterminate has no value.
  Rational evaluate(std::span<const Rational> values) const;

  bool operator==(const Polynomial&) const = default;

 private:
  static Polynomial from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

/// Divides exactly; throws NotExact when b does not divide a, DivisionByZero when b = 0.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic (leading grlex coefficient 1) greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial make_monic(const Polynomial& p);

/// Text such as `e2^2-3*e2+1/2`; parseable by the scalar grammar.
std::string to_string(const Polynomial& p);

}  // namespace hv
