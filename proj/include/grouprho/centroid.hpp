#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouprho/ball.hpp"
#include "grouprho/cayley_graph.hpp"
#include "grouprho/presentation.hpp"

namespace grouprho {

// C(x, y): the ShortLex geodesic from x to y together with every relator
// cycle sharing at least |cycle|/6 edges with it. Vertices come back sorted
// and without repetition.
//
// Ball route: x, y are ball vertices. Throws Error when a needed edge lies
// outside the ball (radius >= d(e, x) + d(x, y) + max |r| / 2 suffices).
std::vector<std::uint32_t> centroid_set(const BallGraph& ball, const Presentation& p,
                                        std::uint32_t x, std::uint32_t y);
// Oracle route, unbounded.
std::vector<ElementId> centroid_set(GroupOracle& oracle, const Presentation& p, ElementId x,
                                    ElementId y);

struct CrViolation {
  char property = 'a';
  std::string detail;
  Word x, y, z;
};

struct CrReport {
  bool passes = true;
  std::size_t r_test = 0;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::size_t cycle_fallbacks = 0;  // triples that needed the relator cycles
  std::size_t max_set_size = 0;
  std::size_t max_diameter_ratio_num = 0;  // largest diam C / d(x, y) seen, as a pair
  std::size_t max_diameter_ratio_den = 1;
  std::optional<CrViolation> violation;
};

// Checks (a) x in C(x, y), (c) |C(x, y) n B(x, r)| <= (2r+1)^2 for all r,
// (d) diam C(x, y) <= 5 d(x, y) for d(x, y) <= r_test, and (b) the triple
// intersection for d(x, y), d(x, z) <= r_test. By equivariance x = e.
CrReport check_cr(GroupOracle& oracle, const Presentation& p, std::size_t r_test);

nlohmann::json to_json(const CrReport& r, const Alphabet& alphabet);

}  // namespace grouprho
