#include "grouprho/interval.hpp"

#include <algorithm>
#include <utility>

#include "grouprho/error.hpp"

namespace grouprho {

Interval::Interval(mpfr_prec_t precision) : _precision(precision) {
  mpfr_init2(_lo, precision);
  mpfr_init2(_hi, precision);
  mpfr_set_zero(_lo, 1);
  mpfr_set_zero(_hi, 1);
}

Interval::Interval(const Interval& other) : _precision(other._precision) {
  mpfr_init2(_lo, _precision);
  mpfr_init2(_hi, _precision);
  mpfr_set(_lo, other._lo, MPFR_RNDD);
  mpfr_set(_hi, other._hi, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other._precision) {
  mpfr_swap(_lo, other._lo);
  mpfr_swap(_hi, other._hi);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    Interval copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(_precision, other._precision);
  mpfr_swap(_lo, other._lo);
  mpfr_swap(_hi, other._hi);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(_lo);
  mpfr_clear(_hi);
}

Interval Interval::exact(const Rational& q, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r._lo, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r._hi, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::log(const Integer& n, mpfr_prec_t precision) {
  if (n <= 0) throw PreconditionError("log of a nonpositive integer");
  Interval r(precision);
  // Convert n outward first, then apply the monotone log outward.
  mpfr_t tmp;
  mpfr_init2(tmp, precision);
  mpfr_set_z(tmp, n.get_mpz_t(), MPFR_RNDD);
  mpfr_log(r._lo, tmp, MPFR_RNDD);
  mpfr_set_z(tmp, n.get_mpz_t(), MPFR_RNDU);
  mpfr_log(r._hi, tmp, MPFR_RNDU);
  mpfr_clear(tmp);
  return r;
}

Interval Interval::log(const Rational& q, mpfr_prec_t precision) {
  return log(q.get_num(), precision) - log(q.get_den(), precision);
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(_precision, o._precision));
  mpfr_add(r._lo, _lo, o._lo, MPFR_RNDD);
  mpfr_add(r._hi, _hi, o._hi, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(_precision, o._precision));
  mpfr_sub(r._lo, _lo, o._hi, MPFR_RNDD);
  mpfr_sub(r._hi, _hi, o._lo, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Integer& k) const {
  if (k < 0) throw PreconditionError("interval scaling by a negative integer");
  Interval r(_precision);
  mpfr_mul_z(r._lo, _lo, k.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(r._hi, _hi, k.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::operator/(const Integer& k) const {
  if (k <= 0) throw PreconditionError("interval division by a nonpositive integer");
  Interval r(_precision);
  mpfr_div_z(r._lo, _lo, k.get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(r._hi, _hi, k.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::min(const Interval& a, const Interval& b) {
  Interval r(std::max(a._precision, b._precision));
  mpfr_min(r._lo, a._lo, b._lo, MPFR_RNDD);
  mpfr_min(r._hi, a._hi, b._hi, MPFR_RNDU);
  return r;
}

bool Interval::certainly_less(const Interval& o) const { return mpfr_less_p(_hi, o._lo) != 0; }
bool Interval::certainly_leq(const Interval& o) const { return mpfr_lessequal_p(_hi, o._lo) != 0; }
bool Interval::possibly_leq(const Interval& o) const { return mpfr_lessequal_p(_lo, o._hi) != 0; }

Rational Interval::lower() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), _lo);
  return q;
}

Rational Interval::upper() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), _hi);
  return q;
}

Rational Interval::width() const { return upper() - lower(); }

std::string Interval::decimal(unsigned digits, Rounding direction) const {
  return to_decimal(direction == Rounding::down ? lower() : upper(), digits, direction);
}

}  // namespace grouprho
