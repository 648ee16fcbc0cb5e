#include "newtonpoly/parser.hpp"

#include <cctype>

namespace newtonpoly {

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PuiseuxPoly run() {
    skip();
    if (at_end()) fail("syntax_error", "empty expression");
    PuiseuxPoly p = expr();
    skip();
    if (!at_end()) fail("syntax_error", "unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const char* code, const std::string& msg) const { throw ParseError(code, msg, pos_); }
  [[noreturn]] void fail_at(const char* code, const std::string& msg, std::size_t at) const {
    throw ParseError(code, msg, at);
  }

  bool at_end() const { return pos_ >= s_.size(); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Length of a minus sign at the cursor (ASCII or U+2212), 0 if none.
  std::size_t minus_len() const {
    if (at_end()) return 0;
    if (s_[pos_] == '-') return 1;
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") return 3;
    return 0;
  }

  bool peek(char c) {
    skip();
    return !at_end() && s_[pos_] == c;
  }

  PuiseuxPoly expr() {
    PuiseuxPoly acc = term();
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (std::size_t n = minus_len()) {
        pos_ += n;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  PuiseuxPoly term() {
    PuiseuxPoly acc = factor();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                               s_[pos_] == '.')) {
        fail("syntax_error", "implicit multiplication; use '*'");
      } else {
        return acc;
      }
    }
  }

  PuiseuxPoly factor() {
    skip();
    if (std::size_t n = minus_len()) {
      pos_ += n;
      return -factor();
    }
    PuiseuxPoly b = base();
    if (!peek('^')) return b;
    ++pos_;
    return power(b);
  }

  PuiseuxPoly base() {
    skip();
    if (at_end()) fail("syntax_error", "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PuiseuxPoly inner = expr();
      if (!peek(')')) fail("syntax_error", "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return PuiseuxPoly(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail("syntax_error", "unexpected character");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational number() {
    std::size_t start = pos_;
    std::string lit = digits();
    if (!at_end() && s_[pos_] == '.') {
      ++pos_;
      std::string frac = digits();
      if (lit.empty() && frac.empty()) fail_at("syntax_error", "malformed number", start);
      lit += "." + frac;
    } else if (!at_end() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail_at("syntax_error", "zero denominator", start);
      lit += "/" + den;
    }
    return parse_rational(lit);
  }

  PuiseuxPoly variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    if (name == "x1" || name == "x") return PuiseuxPoly::variable(Variable::x1);
    if (name == "x2" || name == "y") return PuiseuxPoly::variable(Variable::x2);
    fail_at("unknown_variable", "unknown variable '" + std::string(name) + "'", start);
  }

  long integer_literal() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.empty()) fail("syntax_error", "expected an integer exponent");
    if (d.size() > 6 || std::stol(d) > kMaxExponent) fail_at("syntax_error", "exponent too large", start);
    return std::stol(d);
  }

  PuiseuxPoly power(const PuiseuxPoly& b) {
    skip();
    std::size_t start = pos_;
    if (minus_len()) fail("negative_exponent", "negative exponent");
    if (!peek('(')) return pow(b, static_cast<unsigned long>(integer_literal()));
    ++pos_;
    skip();
    if (minus_len()) fail("negative_exponent", "negative exponent");
    long num = integer_literal();
    long den = 1;
    if (peek('/')) {
      ++pos_;
      skip();
      if (minus_len()) fail("negative_exponent", "negative exponent");
      den = integer_literal();
      if (den == 0) fail_at("syntax_error", "zero denominator", start);
    }
    if (!peek(')')) fail("syntax_error", "expected ')'");
    ++pos_;
    Rational e = make_rational(num, den);
    if (is_integer(e)) return pow(b, static_cast<unsigned long>(to_long(e)));
    // Fractional powers are only defined for x1^r.
    if (b.size() == 1) {
      const auto& [ex, c] = *b.terms().begin();
      if (ex.e2 != 0) fail_at("fractional_x2_exponent", "fractional exponent of x2", start);
      if (c == 1) return PuiseuxPoly::monomial(1, Rational(ex.e1 * e), 0);
    }
    for (const auto& [ex, c] : b.terms()) {
      if (ex.e2 != 0) fail_at("fractional_x2_exponent", "fractional exponent of x2", start);
    }
    fail_at("non_polynomial_power", "fractional power of a non-monomial", start);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PuiseuxPoly parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace newtonpoly
