#include "hv/rational.hpp"

#include <cctype>

#include "hv/errors.hpp"

namespace hv {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer_text(num))
    throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  const auto den = text.substr(slash + 1);
  if (!valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace hv
