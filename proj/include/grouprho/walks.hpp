#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grouprho/ball.hpp"
#include "grouprho/dehn.hpp"
#include "grouprho/kernels.hpp"
#include "grouprho/rational.hpp"

namespace grouprho {

struct WalkOptions {
  const kernels::KernelSet* kernels = nullptr;  // defaults to active_kernels()
  std::size_t threads = 1;
};

// N(g; n), the number of length-n words evaluating to g, for every ball
// vertex g and n <= n_max. Counts are stored as 32-bit limbs per column.
class WalkTable {
 public:
  std::size_t n_max() const { return _columns.size() - 1; }
  std::size_t vertex_count() const { return _vertices; }
  std::size_t letter_count() const { return _letters; }
  std::size_t radius() const { return _radius; }

  // Largest n for which return counts are exact: 2 (radius - 1).
  std::size_t return_limit() const;
  // Largest n for which the whole distribution is exact: the radius.
  std::size_t distribution_limit() const { return _radius; }

  Integer count(std::size_t vertex, std::size_t n) const;
  Integer return_count(std::size_t n) const;
  Rational return_probability(std::size_t n) const;
  // Counts of all vertices at step n (n <= distribution_limit()).
  std::vector<Integer> distribution(std::size_t n) const;

 private:
  friend WalkTable walk_counts(const BallGraph&, std::size_t, const WalkOptions&);

  std::size_t _vertices = 0;
  std::size_t _letters = 0;
  std::size_t _radius = 0;
  std::vector<std::size_t> _limbs;                  // per column
  std::vector<std::vector<std::uint32_t>> _columns;  // limb-major: [l * V + v]
};

WalkTable walk_counts(const BallGraph& ball, std::size_t n_max, const WalkOptions& options = {});

// Only N(e; n) for n <= n_max, without keeping the per-vertex columns.
// Entries beyond 2 (radius - 1) are not exact.
std::vector<Integer> walk_returns(const BallGraph& ball, std::size_t n_max,
                                  const WalkOptions& options = {});

// Return counts N(e; n), n = 0..n_max, of the 2k-regular tree (free group of
// rank k >= 1) by the distance-from-origin recursion.
std::vector<Integer> free_radial_returns(std::size_t rank, std::size_t n_max,
                                         const kernels::KernelSet* kernels = nullptr);
Rational free_radial_p(std::size_t rank, std::size_t n);

// p(n) for even n, computed on demand and cached. Free groups use the radial
// recursion; Dehn presentations use it while n/2 + 1 stays within the
// coincidence radius with the free group of the same rank, and otherwise
// walk counts on a ball of radius n/2 + 1.
class ReturnSeries {
 public:
  struct Options {
    std::size_t vertex_cap = 3'000'000;
    std::size_t threads = 1;
    bool use_coincidence = true;
  };

  explicit ReturnSeries(const WordProblemStrategy& s);
  ReturnSeries(const WordProblemStrategy& s, Options options);

  // Throws ResourceLimit when the required ball exceeds the vertex cap.
  Rational p(std::size_t n);
  // "free-radial", "free-coincident" or "ball"; which method produced p(n).
  std::string method(std::size_t n) const;
  std::size_t letter_count() const { return _strategy.letter_count(); }

 private:
  void ensure_radial(std::size_t n);
  void ensure_ball(std::size_t n);

  WordProblemStrategy _strategy;
  Options _options;
  std::size_t _free_rank = 0;
  std::optional<std::size_t> _coincidence;  // nullopt: identical to free
  bool _radial_ok = false;
  std::vector<Integer> _radial;
  std::vector<Rational> _ball_values;
  std::unique_ptr<GroupOracle> _oracle;
};

}  // namespace grouprho
