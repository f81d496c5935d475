#pragma once

#include <cstddef>
#include <utility>

#include <json.hpp>

#include "grouprho/rational.hpp"

namespace grouprho {

// (C(2n, n) / 4^n)^d, the return probability at time 2n of the simple
// random walk on Z^d with the 2^d cube generators.
Rational cube_p2n(std::size_t d, std::size_t n);

// Rational upper bound for sum_{n > N} cube_p2n(d, n), d >= 3, N >= 1:
// (2/(d-2)) (50/157)^(d/2) N^(1-d/2), from C(2n,n)/4^n <= (pi n)^(-1/2),
// pi >= 157/50 and comparison with the integral. Square roots are rounded up.
Rational cube_tail_bound(std::size_t d, std::size_t N);

struct GreenEvaluation {
  std::size_t d = 0;
  std::size_t N = 0;
  Rational partial;  // sum_{n <= N} cube_p2n(d, n)
  Rational tail_hi;
  Rational theta_lo, theta_hi;
  Rational rho_lo, rho_hi;  // image under x -> 1 - 1/(2x)
};

// theta = sum_n cube_p2n(d, n) is the Green function of Z^d at 1, and
// 1 - 1/(2 theta) is the spectral radius of the free product Z^d * Z^d
// generated by both cube sets (d >= 5). Z^d itself has spectral radius 1.
// Smallest N (up to the tail bound's monotonicity) with tail_hi <= width.
GreenEvaluation theta(std::size_t d, const Rational& target_width);
std::pair<Rational, Rational> rho_zd_cube(std::size_t d, const Rational& target_width);

nlohmann::json to_json(const GreenEvaluation& g, unsigned digits = 20);

}  // namespace grouprho
