#pragma once

#include <mpfr.h>

#include <string>

#include "grouprho/rational.hpp"

namespace grouprho {

// Closed interval [lo, hi] of MPFR floats; every operation rounds outward so
// the true value of the expression is always enclosed.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit Interval(mpfr_prec_t precision = kDefaultPrecision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(const Rational& q, mpfr_prec_t precision = kDefaultPrecision);
  // Natural logarithm of a positive integer or rational.
  static Interval log(const Integer& n, mpfr_prec_t precision = kDefaultPrecision);
  static Interval log(const Rational& q, mpfr_prec_t precision = kDefaultPrecision);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  // Scaling by a nonnegative integer / division by a positive integer.
  Interval operator*(const Integer& k) const;
  Interval operator/(const Integer& k) const;

  // Endpointwise minimum; encloses min(x, y) for x in *this, y in o.
  static Interval min(const Interval& a, const Interval& b);

  bool certainly_less(const Interval& o) const;     // hi < o.lo
  bool certainly_leq(const Interval& o) const;      // hi <= o.lo
  bool possibly_leq(const Interval& o) const;       // lo <= o.hi

  Rational lower() const;
  Rational upper() const;
  Rational width() const;
  std::string decimal(unsigned digits, Rounding direction) const;
  mpfr_prec_t precision() const { return _precision; }

 private:
  mpfr_prec_t _precision;
  mpfr_t _lo;
  mpfr_t _hi;
};

}  // namespace grouprho
