#include "hv/scalar.hpp"

#include <ostream>

#include "hv/errors.hpp"

namespace hv {

Scalar Scalar::canonical(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) return Scalar{};
  if (den.is_constant()) return Scalar(num.scaled(1 / den.constant_value()), Polynomial(1L), 0);
  const Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rational lc = den.leading().second;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  return Scalar(std::move(num), std::move(den), 0);
}

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) { return canonical(num, den); }

Scalar Scalar::indeterminate(unsigned i) {
  if (i < 2) throw Error(ErrorKind::InvalidParams, "indeterminates start at e2");
  return Scalar(Polynomial::variable(i - 2));
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidParams, "scalar " + to_string(*this) + " is not rational");
  return num_.constant_value();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, 0); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_constant() && o.den_.is_constant()) return Scalar(num_ + o.num_);
  if (den_ == o.den_) return canonical(num_ + o.num_, den_);
  return canonical(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar{};
  if (den_.is_constant() && o.den_.is_constant()) return Scalar(num_ * o.num_);
  // Cross-cancel first so the products stay small.
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  return canonical(exact_div(num_, g1) * exact_div(o.num_, g2),
                   exact_div(den_, g2) * exact_div(o.den_, g1));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return canonical(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + to_string(*this) + " by zero");
  return *this * o.inverse();
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  const auto e = static_cast<unsigned>(k);
  if (den_.is_constant()) return Scalar(num_.pow(e));
  return Scalar(num_.pow(e), den_.pow(e), 0);
}

Rational Scalar::specialize(std::span<const Rational> assignment) const {
  const Rational d = den_.evaluate(assignment);
  if (d == 0) throw Error(ErrorKind::SpecializationPole, "denominator " + to_string(den_) + " vanishes");
  return num_.evaluate(assignment) / d;
}

namespace {

// A polynomial prints as a single token when it is an integer or a bare power
// product such as e2^3.
bool is_atomic(const Polynomial& p) {
  if (p.is_zero()) return true;
  if (p.terms().size() != 1) return false;
  const auto& [m, c] = p.leading();
  if (m.is_one()) return is_integer(c);
  if (c != 1) return false;
  unsigned factors = 0;
  for (std::size_t i = 0; i < m.span(); ++i) factors += m[i] != 0 ? 1U : 0U;
  return factors == 1;
}

}  // namespace

std::string to_string(const Scalar& s) {
  if (s.denominator().is_constant()) return to_string(s.numerator());
  std::string num = to_string(s.numerator());
  std::string den = to_string(s.denominator());
  if (!is_atomic(s.numerator())) num = "(" + num + ")";
  if (!is_atomic(s.denominator())) den = "(" + den + ")";
  return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace hv
