#include "grouprho/zdgreen.hpp"

#include "grouprho/error.hpp"

namespace grouprho {

namespace {

Integer central_binomial(std::size_t n) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c;
}

// Rational upper bound of sqrt(q), accurate to about 2^-96 relative.
Rational sqrt_up(const Rational& q) {
  Integer scale = ipow(Integer(2), 96);
  Integer x = q.get_num() * q.get_den() * scale * scale;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r != x) r += 1;
  Rational out(r, q.get_den() * scale);
  out.canonicalize();
  return out;
}

}  // namespace

Rational cube_p2n(std::size_t d, std::size_t n) {
  Rational q(ipow(central_binomial(n), d), ipow(Integer(4), n * d));
  q.canonicalize();
  return q;
}

Rational cube_tail_bound(std::size_t d, std::size_t N) {
  if (d < 3 || N < 1) throw PreconditionError("tail bound needs d >= 3 and N >= 1");
  // (50/157)^(d/2) N^(-(d-2)/2) = sqrt((50/157)^d / N^(d-2))
  Rational x(ipow(Integer(50), d), ipow(Integer(157), d) * ipow(Integer(static_cast<unsigned long>(N)), d - 2));
  x.canonicalize();
  Rational factor(2, static_cast<unsigned long>(d - 2));
  factor.canonicalize();
  return factor * sqrt_up(x);
}

GreenEvaluation theta(std::size_t d, const Rational& target_width) {
  if (d < 5) throw PreconditionError("the Green function formula is used only for d >= 5");
  if (target_width <= 0) throw PreconditionError("target width must be positive");
  std::size_t hi = 1;
  while (cube_tail_bound(d, hi) > target_width) {
    if (hi > (std::size_t{1} << 40)) throw ResourceLimit("target width too small");
    hi *= 2;
  }
  std::size_t lo = hi / 2;  // tail(lo) > width, or lo == 0
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (cube_tail_bound(d, mid) <= target_width) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  GreenEvaluation g;
  g.d = d;
  g.N = hi;
  // Horner over the common denominator 4^(dN), with C(2n,n) by the
  // multiplicative recurrence.
  Integer sum(0), c(1);
  for (std::size_t n = 0; n <= g.N; ++n) {
    if (n > 0) {
      c *= static_cast<unsigned long>(2 * (2 * n - 1));
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n);
    }
    sum <<= static_cast<mp_bitcnt_t>(2 * d);
    sum += ipow(c, d);
  }
  g.partial = Rational(sum, Integer(1) << static_cast<mp_bitcnt_t>(2 * d * g.N));
  g.partial.canonicalize();
  g.tail_hi = cube_tail_bound(d, g.N);
  g.theta_lo = g.partial;
  g.theta_hi = g.partial + g.tail_hi;
  g.rho_lo = 1 - 1 / (2 * g.theta_lo);
  g.rho_hi = 1 - 1 / (2 * g.theta_hi);
  g.rho_lo.canonicalize();
  g.rho_hi.canonicalize();
  return g;
}

std::pair<Rational, Rational> rho_zd_cube(std::size_t d, const Rational& target_width) {
  GreenEvaluation g = theta(d, target_width);
  return {g.rho_lo, g.rho_hi};
}

nlohmann::json to_json(const GreenEvaluation& g, unsigned digits) {
  return nlohmann::json{{"d", g.d},
                        {"N", g.N},
                        {"tail_hi", to_decimal(g.tail_hi, digits, Rounding::up)},
                        {"theta_lo", to_decimal(g.theta_lo, digits, Rounding::down)},
                        {"theta_hi", to_decimal(g.theta_hi, digits, Rounding::up)},
                        {"rho_lo", to_decimal(g.rho_lo, digits, Rounding::down)},
                        {"rho_hi", to_decimal(g.rho_hi, digits, Rounding::up)}};
}

}  // namespace grouprho
