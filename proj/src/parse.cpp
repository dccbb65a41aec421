#include "eszlab/parse.hpp"

#include <cctype>

namespace eszlab::exactq {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (consume('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (consume('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(at, "expected nonnegative integer exponent");
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 4096) throw ParseError(at, "exponent too large");
        ++pos_;
      }
      return pow(b, static_cast<unsigned>(e));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!consume(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Poly::variable(c == 'x' ? Var::x : c == 'y' ? Var::y : Var::z);
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(pos_, std::string("unknown variable '") + c + "'", errc::unknown_variable);
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return Poly(rational_literal());
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  BigInt digits() {
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(at, "expected digits");
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      s.push_back(text_[pos_++]);
    return BigInt(s);
  }

  Rational rational_literal() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    BigInt n = digits();
    if (neg) n = -n;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      BigInt d = digits();
      if (d == 0) throw ParseError(at, "denominator must be positive");
      return Rational(n, d);
    }
    return Rational(n);
  }

  friend Rational parse_rational_impl(std::string_view);

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
  Poly p = parse_poly(text);
  if (!p.is_constant()) throw ParseError(0, "expected a rational literal");
  return p.constant_value();
}

UniPoly parse_curve_rhs(std::string_view text) {
  // Accept "y^2 = <expr>" or a bare "<expr>"; the right-hand side must be
  // univariate in x.
  std::size_t eq = text.find('=');
  std::string_view rhs = text;
  if (eq != std::string_view::npos) {
    std::string_view lhs = text.substr(0, eq);
    std::size_t i = 0, j = lhs.size();
    while (i < j && std::isspace(static_cast<unsigned char>(lhs[i]))) ++i;
    while (j > i && std::isspace(static_cast<unsigned char>(lhs[j - 1]))) --j;
    if (lhs.substr(i, j - i) != "y^2")
      throw ParseError(i, "curve must be given as \"y^2 = f(x)\"");
    rhs = text.substr(eq + 1);
  }
  Poly f = parse_poly(rhs);
  if (f.depends_on(Var::y) || f.depends_on(Var::z))
    throw ParseError(0, "curve right-hand side must involve only x");
  return to_unipoly(f, Var::x);
}

}  // namespace eszlab::exactq
