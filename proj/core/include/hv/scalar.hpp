#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hv/polynomial.hpp"
#include "hv/rational.hpp"

namespace hv {

/// Element of the rational-function field Q(e2, ..., en).
///
/// The value is stored as numerator / denominator with gcd(num, den) = 1 and a
/// monic denominator (grlex leading coefficient 1), so two Scalars are equal
/// exactly when their stored polynomials coincide. A zero Scalar has
/// denominator 1. Rationals embed with denominator 1.
class Scalar {
 public:
  Scalar() : den_(1L) {}
  Scalar(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)

  /// num / den in canonical form; DivisionByZero when den = 0.
  static Scalar fraction(const Polynomial& num, const Polynomial& den);
  /// The indeterminate e_i, i >= 2.
  static Scalar indeterminate(unsigned i);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == Polynomial(1L); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_rational().
  Rational to_rational() const;
  /// One past the highest indeterminate slot mentioned.
  std::size_t span() const { return std::max(num_.span(), den_.span()); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// DivisionByZero when o = 0.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  /// Integer power; negative exponents invert (DivisionByZero on 0^-k).
  Scalar pow(long k) const;

  /// Exact evaluation at e_{i+2} = assignment[i]. Throws SpecializationPole
  /// when the denominator vanishes there.
  Rational specialize(std::span<const Rational> assignment) const;

  bool operator==(const Scalar&) const = default;

 private:
  Scalar(Polynomial num, Polynomial den, int /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  static Scalar canonical(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

/// Textual form accepted by parse_scalar: `e2^2-1`, `1/2`, `(e2+1)/(e3)`.
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hv
