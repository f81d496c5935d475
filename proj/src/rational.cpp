#include "grouprho/rational.hpp"

#include <cctype>

#include "grouprho/error.hpp"

namespace grouprho {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational ipow(const Rational& base, unsigned long exponent) {
  Rational r(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

namespace {

Integer scaled_integer(const Rational& q, unsigned digits, Rounding direction) {
  Integer scale = ipow(Integer(10), digits);
  Integer num = q.get_num() * scale;
  return direction == Rounding::down ? floor_div(num, q.get_den())
                                     : ceil_div(num, q.get_den());
}

}  // namespace

Rational decimal_round(const Rational& q, unsigned digits, Rounding direction) {
  Rational r(scaled_integer(q, digits, direction), ipow(Integer(10), digits));
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& q, unsigned digits, Rounding direction) {
  Integer n = scaled_integer(q, digits, direction);
  bool negative = n < 0;
  if (negative) n = -n;
  std::string s = n.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char* what) -> Rational { throw ParseError(what, i); };
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < text.size() && text[i] == '/') {
    if (!any) return fail("expected numerator");
    ++i;
    std::string den;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
    if (den.empty()) return fail("expected denominator");
    if (i != text.size()) return fail("trailing characters in rational");
    Integer d(den, 10);
    if (d == 0) return fail("zero denominator");
    Rational r(Integer(digits, 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --exponent;
      any = true;
    }
  }
  if (!any) return fail("expected a number");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) eneg = text[i++] == '-';
    std::string e;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
    if (e.empty() || e.size() > 6) return fail("bad exponent");
    long ev = std::stol(e);
    exponent += eneg ? -ev : ev;
  }
  if (i != text.size()) return fail("trailing characters in number");
  Rational r{Integer(digits, 10)};
  if (exponent > 0) r *= ipow(Integer(10), static_cast<unsigned long>(exponent));
  if (exponent < 0) r /= ipow(Integer(10), static_cast<unsigned long>(-exponent));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace grouprho
