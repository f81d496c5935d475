#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include <json.hpp>

#include "grouprho/rational.hpp"

namespace grouprho {

// The nonnegative real q^(1/m), kept canonical: q reduced and m minimal.
class RootBound {
 public:
  RootBound() : _q(0), _m(1) {}
  RootBound(const Rational& q, unsigned long m);

  const Rational& q() const { return _q; }
  unsigned long m() const { return _m; }

  bool operator==(const RootBound& o) const { return _q == o._q && _m == o._m; }

 private:
  Rational _q;
  unsigned long _m;
};

// Exact comparison of the real values. Cross-powering is used directly when
// the integers stay small; otherwise an MPFR enclosure of log(q)/m settles
// it, with precision escalation and exact powering as the last resort.
std::strong_ordering compare(const RootBound& a, const RootBound& b);

const RootBound& max(const RootBound& a, const RootBound& b);
const RootBound& min(const RootBound& a, const RootBound& b);

std::string to_decimal(const RootBound& b, unsigned digits, Rounding direction);
// Rational value of the directed decimal approximation.
Rational decimal_bound(const RootBound& b, unsigned digits, Rounding direction);
// Compares q^(1/m) with a rational exactly.
std::strong_ordering compare(const RootBound& a, const Rational& r);

// p(2n)^(1/2n), a lower bound for the spectral radius.
RootBound rho_lower(const Rational& p2n, std::size_t n);
// ((10n+1)^6 p(2n))^(1/2n), an upper bound for C'(1/6) groups.
RootBound rho_upper(const Rational& p2n, std::size_t n);

nlohmann::json to_json(const RootBound& b, unsigned digits = 20);

}  // namespace grouprho
