#include "grouprho/root_bound.hpp"

#include <numeric>
#include <vector>

#include "grouprho/error.hpp"
#include "grouprho/interval.hpp"

namespace grouprho {

namespace {

// Products with more bits than this are compared through intervals first.
constexpr double kExactBitBudget = 1 << 22;
constexpr mpfr_prec_t kMaxIntervalPrecision = 1 << 14;

bool exact_root(const Integer& x, unsigned long d, Integer& root) {
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), d) != 0;
}

std::size_t bits(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

}  // namespace

RootBound::RootBound(const Rational& q, unsigned long m) : _q(q), _m(m) {
  if (m == 0) throw PreconditionError("root index must be positive");
  _q.canonicalize();
  if (_q < 0) throw PreconditionError("root bound of a negative rational");
  if (_q == 0 || _q == 1) {
    _m = 1;
    return;
  }
  for (unsigned long d = _m; d >= 2; --d) {
    if (_m % d != 0) continue;
    Integer rn, rd;
    if (exact_root(_q.get_num(), d, rn) && exact_root(_q.get_den(), d, rd)) {
      _q = Rational(rn, rd);
      _q.canonicalize();
      _m /= d;
      return;
    }
  }
}

std::strong_ordering compare(const RootBound& a, const RootBound& b) {
  if (a == b) return std::strong_ordering::equal;
  int za = sgn(a.q()), zb = sgn(b.q());
  if (za == 0 || zb == 0) return za <=> zb;
  int sa = cmp(a.q(), 1), sb = cmp(b.q(), 1);
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;

  unsigned long l = std::lcm(a.m(), b.m());
  unsigned long ea = l / a.m(), eb = l / b.m();
  double size = static_cast<double>(ea) * (bits(a.q().get_num()) + bits(b.q().get_den())) +
                static_cast<double>(eb) * (bits(b.q().get_num()) + bits(a.q().get_den()));
  if (size > kExactBitBudget) {
    for (mpfr_prec_t prec = Interval::kDefaultPrecision; prec <= kMaxIntervalPrecision; prec *= 2) {
      Interval la = Interval::log(a.q(), prec) / Integer(a.m());
      Interval lb = Interval::log(b.q(), prec) / Integer(b.m());
      if (la.certainly_less(lb)) return std::strong_ordering::less;
      if (lb.certainly_less(la)) return std::strong_ordering::greater;
    }
  }
  // qa^ea vs qb^eb  <=>  na^ea * db^eb vs nb^eb * da^ea
  Integer lhs = ipow(a.q().get_num(), ea) * ipow(b.q().get_den(), eb);
  Integer rhs = ipow(b.q().get_num(), eb) * ipow(a.q().get_den(), ea);
  int c = cmp(lhs, rhs);
  return c <=> 0;
}

std::strong_ordering compare(const RootBound& a, const Rational& r) {
  if (r < 0) return std::strong_ordering::greater;
  return compare(a, RootBound(r, 1));
}

const RootBound& max(const RootBound& a, const RootBound& b) {
  return compare(a, b) == std::strong_ordering::less ? b : a;
}

const RootBound& min(const RootBound& a, const RootBound& b) {
  return compare(b, a) == std::strong_ordering::less ? b : a;
}

Rational decimal_bound(const RootBound& b, unsigned digits, Rounding direction) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(b.m()) * digits);
  Integer num = b.q().get_num() * scale;
  Integer x = floor_div(num, b.q().get_den());
  Integer r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), b.m());
  bool exact = ipow(r, b.m()) * b.q().get_den() == num;
  if (direction == Rounding::up && !exact) r += 1;
  Rational v(r, ipow(Integer(10), digits));
  v.canonicalize();
  return v;
}

std::string to_decimal(const RootBound& b, unsigned digits, Rounding direction) {
  // decimal_bound is already an exact multiple of 10^-digits.
  return to_decimal(decimal_bound(b, digits, direction), digits, Rounding::down);
}

RootBound rho_lower(const Rational& p2n, std::size_t n) {
  if (n == 0) throw PreconditionError("rho_lower needs n >= 1");
  return RootBound(p2n, 2 * n);
}

RootBound rho_upper(const Rational& p2n, std::size_t n) {
  if (n == 0) throw PreconditionError("rho_upper needs n >= 1");
  Integer p = ipow(Integer(10 * n + 1), 6);
  return RootBound(p2n * p, 2 * n);
}

nlohmann::json to_json(const RootBound& b, unsigned digits) {
  return nlohmann::json{{"q", to_string(b.q())},
                        {"m", b.m()},
                        {"decimal_down", to_decimal(b, digits, Rounding::down)},
                        {"decimal_up", to_decimal(b, digits, Rounding::up)}};
}

}  // namespace grouprho
