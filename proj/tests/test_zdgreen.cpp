#include <doctest.h>

#include "grouprho/ball.hpp"
#include "grouprho/error.hpp"
#include "grouprho/walks.hpp"
#include "grouprho/zdgreen.hpp"

using namespace grouprho;

TEST_CASE("cube return probabilities") {
  CHECK(cube_p2n(1, 1) == Rational(1, 2));
  CHECK(cube_p2n(2, 1) == Rational(1, 4));
  for (std::size_t d = 1; d <= 6; ++d) CHECK(cube_p2n(d, 0) == 1);
  for (std::size_t d = 1; d <= 6; ++d) CHECK(cube_p2n(d, 1) == Rational(1, 1ul << d));
  CHECK(cube_p2n(5, 2) == Rational(243, 32768));
}

TEST_CASE("cube_p2n agrees with walk counts on Z^d") {
  for (std::size_t d = 1; d <= 3; ++d) {
    WalkTable t = walk_counts(build_ball(WordProblemStrategy::zd_cube(d), 6), 10);
    for (std::size_t n = 0; n <= 5; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(t.return_probability(2 * n) == cube_p2n(d, n));
    }
  }
}

TEST_CASE("central binomial bound with pi >= 157/50") {
  // C(2n,n)/4^n <= (pi n)^(-1/2) <= (50/(157 n))^(1/2), checked squared
  Integer c(1);
  for (unsigned long n = 1; n <= 10000; ++n) {
    c = c * (2 * (2 * n - 1)) / n;
    Integer lhs = c * c * 157 * n;
    Integer rhs = ipow(Integer(16), n) * 50;
    if (lhs > rhs) {
      FAIL("bound fails at n = " << n);
      break;
    }
  }
}

TEST_CASE("tail bound dominates a long stretch of the tail") {
  for (std::size_t d : {5u, 6u, 7u}) {
    for (std::size_t N : {1u, 10u, 40u}) {
      Rational stretch(0);
      for (std::size_t n = N + 1; n <= N + 400; ++n) stretch += cube_p2n(d, n);
      CHECK(stretch < cube_tail_bound(d, N));
    }
  }
}

TEST_CASE("theta evaluation") {
  CHECK_THROWS_AS(theta(4, Rational(1, 1000)), PreconditionError);
  CHECK_THROWS_AS(theta(5, Rational(0)), PreconditionError);

  GreenEvaluation coarse = theta(5, Rational(1, 100));
  Rational partial(0);
  for (std::size_t n = 0; n <= coarse.N; ++n) partial += cube_p2n(5, n);
  CHECK(coarse.partial == partial);
  CHECK(coarse.theta_lo == coarse.partial);
  CHECK(coarse.tail_hi <= Rational(1, 100));
  CHECK(coarse.N >= 1);
  if (coarse.N > 1) CHECK(cube_tail_bound(5, coarse.N - 1) > Rational(1, 100));

  GreenEvaluation fine = theta(5, Rational(1, 1000000));
  CHECK(fine.N <= 100000);
  CHECK(fine.rho_hi - fine.rho_lo <= Rational(1, 1000000));
  CHECK(fine.theta_lo >= coarse.theta_lo);
  CHECK(fine.theta_hi <= coarse.theta_hi);
  CHECK(fine.rho_lo > 0);
  CHECK(fine.rho_hi < 1);
}

TEST_CASE("rho interval bounds the free product walk from above") {
  // The value 1 - 1/(2 theta) is the spectral radius of Z^d * Z^d generated
  // by both cube sets. Walks that stay in one factor give
  // p(2n) >= 2 cube_p2n(d, n) / 4^n, and p(2) = 2^-(d+1) exactly.
  for (std::size_t d : {5u, 6u}) {
    GreenEvaluation g = theta(d, Rational(1, 100000));
    CHECK(Rational(1, 2ul << d) <= ipow(g.rho_hi, 2));
    for (std::size_t n = 1; n <= 30; ++n) {
      Rational one_factor = 2 * cube_p2n(d, n) / ipow(Rational(4), n);
      CHECK(one_factor <= ipow(g.rho_hi, 2 * n));
    }
  }
}

TEST_CASE("N = 2 partial sum for d = 5") {
  Rational expected = Rational(1) + Rational(1, 32) + Rational(243, 32768);
  Rational partial = cube_p2n(5, 0) + cube_p2n(5, 1) + cube_p2n(5, 2);
  CHECK(partial == expected);
}

TEST_CASE("rho map is monotone and fixes the algebra") {
  auto rho = [](const Rational& t) -> Rational { return Rational(1) - 1 / (2 * t); };
  CHECK(rho(Rational(1)) == Rational(1, 2));
  CHECK(rho(Rational(11, 10)) > rho(Rational(1)));
  auto [lo, hi] = rho_zd_cube(6, Rational(1, 10000));
  CHECK(lo < hi);
}
