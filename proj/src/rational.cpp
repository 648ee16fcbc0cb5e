#include "newtonpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace newtonpoly {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char c : whole + frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed decimal literal: " + s);
      }
    }
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(Integer(whole + frac, 10), den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw std::overflow_error("rational " + to_string(r) + " is not a machine integer");
  }
  return r.get_num().get_si();
}

double to_double(const Rational& r) { return r.get_d(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return Rational(0);
  if (sgn(hi) <= 0) return -simplest_between(-hi, -lo);
  // Stern-Brocot descent on the open interval (lo, hi) with lo >= 0.
  Integer fl = floor(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  // lo and hi share the integer part; recurse on reciprocals of the
  // fractional parts.
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = hi - Rational(fl);
  if (sgn(lo_frac) == 0) {
    // interval (fl, fl + hi_frac): pick fl + 1/k for the smallest k.
    Rational inv = 1 / hi_frac;
    Integer k = floor(inv) + 1;
    return Rational(fl) + Rational(Integer(1), k);
  }
  Rational inner = simplest_between(1 / hi_frac, 1 / lo_frac);
  return Rational(fl) + 1 / inner;
}

}  // namespace newtonpoly
