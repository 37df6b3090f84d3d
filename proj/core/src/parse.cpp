#include "hv/parse.hpp"

#include <cctype>
#include <string>

#include "hv/errors.hpp"

namespace hv {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_end() { return peek() == '\0'; }

  bool starts_integer() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  long small_integer() {
    const Integer z = integer();
    if (!z.fits_slong_p()) fail("integer too large");
    return z.get_si();
  }

  long signed_small_integer() {
    if (accept('-')) return -small_integer();
    accept('+');
    return small_integer();
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::SyntaxError,
                what + " at line " + std::to_string(line) + ", column " + std::to_string(col) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Scalar scalar_expr(Cursor& in);

Scalar indeterminate(Cursor& in, const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'e') in.fail("unknown symbol '" + ident + "'");
  for (std::size_t i = 1; i < ident.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) in.fail("unknown symbol '" + ident + "'");
  const long i = std::stol(ident.substr(1));
  if (i < 2 || i > static_cast<long>(kMaxRank)) in.fail("indeterminate '" + ident + "' out of range");
  return Scalar::indeterminate(static_cast<unsigned>(i));
}

Scalar primary(Cursor& in) {
  if (in.accept('(')) {
    Scalar s = scalar_expr(in);
    in.expect(')');
    return s;
  }
  if (in.starts_integer()) return Scalar(Rational(in.integer()));
  if (in.peek() == 'e') return indeterminate(in, in.identifier());
  in.fail("expected a number, an indeterminate or '('");
}

Scalar power(Cursor& in) {
  Scalar base = primary(in);
  if (in.accept('^')) return base.pow(in.signed_small_integer());
  return base;
}

Scalar scalar_term(Cursor& in) {
  Scalar acc = power(in);
  while (true) {
    if (in.accept('*')) {
      acc *= power(in);
    } else if (in.peek() == '/') {
      in.accept('/');
      Scalar d = power(in);
      if (d.is_zero()) in.fail("division by zero");
      acc /= d;
    } else {
      return acc;
    }
  }
}

Scalar scalar_expr(Cursor& in) {
  bool negate = false;
  if (in.accept('-')) negate = true;
  else in.accept('+');
  Scalar acc = scalar_term(in);
  if (negate) acc = -acc;
  while (true) {
    if (in.accept('+')) acc += scalar_term(in);
    else if (in.accept('-')) acc -= scalar_term(in);
    else return acc;
  }
}

GroupElem group_elem(Cursor& in) {
  in.expect('[');
  std::vector<int> coords;
  do {
    const long c = in.signed_small_integer();
    if (c < -1000000 || c > 1000000) in.fail("coordinate out of range");
    coords.push_back(static_cast<int>(c));
  } while (in.accept(','));
  in.expect(']');
  if (coords.size() > kMaxRank) in.fail("too many coordinates");
  return GroupElem(std::span<const int>(coords));
}

BasisKey basis_key(Cursor& in, const AlgebraContext& ctx, const std::string& ident) {
  if (ident == "L" || ident == "I") {
    const GroupElem a = group_elem(in);
    if (a.rank() != ctx.rank())
      in.fail("degree " + to_string(a) + " has rank " + std::to_string(a.rank()) + ", expected " + std::to_string(ctx.rank()));
    return ident == "L" ? BasisKey::L(a) : BasisKey::I(a);
  }
  if (ident == "CL") return BasisKey::CL();
  if (ident == "CI") return BasisKey::CI();
  if (ident == "CLIP") return BasisKey::CLIprime();
  if (ident == "CLI") {
    if (ctx.variant() != Variant::DerivedPrime) in.fail("'CLI' needs an index outside the derived-prime algebra");
    return BasisKey::CLI(0);
  }
  if (ident.rfind("CLI", 0) == 0) {
    const std::string digits = ident.substr(3);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) in.fail("unknown basis symbol '" + ident + "'");
    if (digits.size() > 2) in.fail("central index too large in '" + ident + "'");
    return BasisKey::CLI(std::stoi(digits));
  }
  in.fail("unknown basis symbol '" + ident + "'");
}

bool starts_basis(char c) { return c == 'L' || c == 'I' || c == 'C'; }

Scalar factor(Cursor& in) {
  if (in.accept('(')) {
    Scalar s = scalar_expr(in);
    in.expect(')');
    return s;
  }
  if (in.starts_integer()) {
    Rational q(in.integer());
    if (in.accept('/')) {
      const Integer d = in.integer();
      if (d == 0) in.fail("division by zero");
      q /= Rational(d);
    }
    return Scalar(q);
  }
  if (in.peek() == 'e') {
    Scalar s = indeterminate(in, in.identifier());
    if (in.accept('^')) s = s.pow(in.signed_small_integer());
    return s;
  }
  in.fail("expected a coefficient or a basis symbol");
}

void element_term(Cursor& in, const AlgebraContext& ctx, bool negate, Element& out) {
  Scalar coef(negate ? -1L : 1L);
  while (!starts_basis(in.peek())) {
    coef *= factor(in);
    in.expect('*');
  }
  const BasisKey k = basis_key(in, ctx, in.identifier());
  validate(ctx, k);
  out.add(k, coef);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Cursor in(text);
  Scalar s = scalar_expr(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return s;
}

GroupElem parse_group_elem(std::string_view text) {
  Cursor in(text);
  GroupElem a = group_elem(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return a;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  Cursor in(text);
  std::vector<Scalar> out;
  in.expect('[');
  if (!in.accept(']')) {
    do {
      out.push_back(scalar_expr(in));
    } while (in.accept(','));
    in.expect(']');
  }
  if (!in.at_end()) in.fail("unexpected trailing input");
  return out;
}

Element parse_element(const AlgebraContext& ctx, std::string_view text) {
  Cursor in(text);
  Element out;
  const auto first = text.find_first_not_of(" \t\n");
  const auto last = text.find_last_not_of(" \t\n");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "0") return out;
  bool negate = false;
  if (in.accept('-')) negate = true;
  else in.accept('+');
  element_term(in, ctx, negate, out);
  while (!in.at_end()) {
    if (in.accept('+')) element_term(in, ctx, false, out);
    else if (in.accept('-')) element_term(in, ctx, true, out);
    else in.fail("expected '+' or '-'");
  }
  return out;
}

}  // namespace hv
