#include "hv/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hv/errors.hpp"

namespace hv {

Monomial Monomial::variable(std::size_t slot, std::uint16_t power) {
  if (slot >= kMaxIndeterminates)
    throw Error(ErrorKind::RankTooLarge, "indeterminate e" + std::to_string(slot + 2) + " out of range");
  Monomial m;
  m.exps_[slot] = power;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::size_t Monomial::span() const {
  for (std::size_t i = kMaxIndeterminates; i > 0; --i)
    if (exps_[i - 1] != 0) return i;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw Error(ErrorKind::InvalidParams, "exponent overflow");
    out.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxIndeterminates; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxIndeterminates; ++i)
    out.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
  return out;
}

Monomial Monomial::without(std::size_t slot) const {
  Monomial out = *this;
  out.exps_[slot] = 0;
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = kMaxIndeterminates; i > 0; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_before(const Polynomial::Term& x, const Polynomial::Term& y) {
  return grlex_compare(x.first, y.first) > 0;
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t slot) { return monomial(Monomial::variable(slot), Rational(1)); }

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error(ErrorKind::InvalidParams, "polynomial is not constant");
  return terms_.front().second;
}

std::size_t Polynomial::span() const {
  std::size_t s = 0;
  for (const auto& [m, c] : terms_) s = std::max(s, m.span());
  return s;
}

unsigned Polynomial::degree_in(std::size_t slot) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[slot]);
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t slot) const {
  std::vector<std::vector<Term>> buckets(degree_in(slot) + 1);
  for (const auto& [m, c] : terms_) buckets[m[slot]].emplace_back(m.without(slot), c);
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_unsorted(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(std::span<const Polynomial> coeffs, std::size_t slot) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial xk = Monomial::variable(slot, static_cast<std::uint16_t>(k));
    for (const auto& [m, c] : coeffs[k].terms_) terms.emplace_back(m * xk, c);
  }
  return from_unsorted(std::move(terms));
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && term_before(*i, *j))) {
      p.terms_.push_back(*i++);
    } else if (i == terms_.end() || term_before(*j, *i)) {
      p.terms_.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) p.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return scaled(o.terms_.front().second);
  if (is_constant()) return o.scaled(terms_.front().second);
  std::vector<Term> terms;
  terms.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) terms.emplace_back(ma * mb, ca * cb);
  return from_unsorted(std::move(terms));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (span() > values.size())
    throw Error(ErrorKind::RankMismatch, "no value supplied for e" + std::to_string(span() + 1));
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.span(); ++i) {
      if (m[i] == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), values[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(den.get_mpz_t(), values[i].get_den_mpz_t(), m[i]);
      t *= Rational(num, den);
    }
    sum += t;
  }
  return sum;
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Rational lc = p.leading().second;
  if (lc == 1) return p;
  return p.scaled(1 / lc);
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  const auto& [lm, lc] = b.leading();
  std::vector<Polynomial::Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!lm.divides(rm)) throw Error(ErrorKind::NotExact, to_string(b) + " does not divide " + to_string(a));
    Polynomial t = Polynomial::monomial(lm.quotient_of(rm), rc / lc);
    quotient.push_back(t.leading());
    r -= t * b;
  }
  Polynomial q;
  for (auto& t : quotient) q += Polynomial::monomial(t.first, t.second);
  return q;
}

namespace {

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b);

// Gcd of the coefficients of p seen as a polynomial in `slot`.
Polynomial content_in(const Polynomial& p, std::size_t slot) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(slot)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd_nonzero(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t slot) {
  return make_monic(exact_div(p, content_in(p, slot)));
}

// Some nonzero multiple lc(b)^k * (a mod b) in the variable `slot`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t slot) {
  auto r = a.coefficients_in(slot);
  const auto bc = b.coefficients_in(slot);
  const std::size_t n = bc.size() - 1;
  const Polynomial& lb = bc[n];
  for (std::size_t k = r.size(); k-- > n;) {
    if (r[k].is_zero()) continue;
    const Polynomial t = r[k];
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= n; ++j) r[k - n + j] -= t * bc[j];
  }
  r.resize(n);
  return Polynomial::from_coefficients(r, slot);
}

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1L);
  const std::size_t slot = std::max(a.span(), b.span()) - 1;
  const Polynomial ca = content_in(a, slot);
  const Polynomial cb = content_in(b, slot);
  const Polynomial g = gcd_nonzero(ca, cb);
  Polynomial p = make_monic(exact_div(a, ca));
  Polynomial q = make_monic(exact_div(b, cb));
  if (p.degree_in(slot) < q.degree_in(slot)) std::swap(p, q);
  while (!q.is_zero()) {
    if (q.degree_in(slot) == 0) {
      p = Polynomial(1L);
      break;
    }
    Polynomial r = pseudo_remainder(p, q, slot);
    p = std::move(q);
    q = r.is_zero() ? Polynomial{} : primitive_part(r, slot);
  }
  return make_monic(g * p);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  return gcd_nonzero(a, b);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    if (m.is_one()) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    bool first_factor = true;
    for (std::size_t i = 0; i < m.span(); ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << 'e' << (i + 2);
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

}  // namespace hv
