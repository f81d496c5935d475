#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grouprho/ball.hpp"
#include "grouprho/dehn.hpp"
#include "grouprho/interval.hpp"
#include "grouprho/root_bound.hpp"

namespace grouprho {

struct AsymptoticsOptions {
  // Words of length <= quotient_length are materialized for the
  // upper-approximation sequences; 0 disables them.
  std::size_t quotient_length = 4;
  std::size_t samples = 8;
  std::size_t pairs_per_sample = 4096;
  std::size_t vertex_cap = 50'000'000;
  std::size_t threads = 1;
};

struct GrowthReport {
  std::vector<std::pair<std::size_t, Integer>> exact;  // (n, beta(n)), n = 0..n_max
  RootBound upper_envelope;                             // min_{n >= 1} beta(n)^(1/n)
  std::size_t envelope_n = 0;
  std::vector<RootBound> sequence;     // y_k = min_{1 <= n <= L} beta_k(n)^(1/n)
  std::vector<std::size_t> pairs;      // pairs consumed before y_k
  std::size_t quotient_length = 0;
};

struct EntropyReport {
  std::vector<std::pair<std::size_t, Interval>> exact;  // (n, H(X_n)), n = 0..n_max
  Interval upper_envelope;                               // min_{n >= 1} H(X_n)/n
  std::vector<Interval> sequence;                        // min_{1 <= n <= L} H_k^n / n
  std::vector<std::size_t> pairs;
  std::size_t quotient_length = 0;
};

// Natural logarithms throughout. The sequences need a presentation and are
// left empty for the Z^d strategy.
GrowthReport growth(const WordProblemStrategy& s, std::size_t n_max,
                    const AsymptoticsOptions& options = {});
EntropyReport entropy(const WordProblemStrategy& s, std::size_t n_max,
                      const AsymptoticsOptions& options = {});

// -sum (c/total) log(c/total) over the given counts, which sum to total.
Interval shannon_entropy(const std::vector<Integer>& counts, const Integer& total);

nlohmann::json to_json(const GrowthReport& r, unsigned digits = 20);
nlohmann::json to_json(const EntropyReport& r, unsigned digits = 20);

}  // namespace grouprho
