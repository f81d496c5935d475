#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouprho/presentation.hpp"
#include "grouprho/root_bound.hpp"
#include "grouprho/walks.hpp"
#include "grouprho/words.hpp"

namespace grouprho {

// The caller's assertion that the normal closure of w is non-amenable
// whenever w is nontrivial. It cannot be checked; it is only recorded.
struct Promise {
  bool declared = true;
};

enum class Verdict { trivial, nontrivial, undecided };

struct TrivialWitness {
  std::size_t index = 0;  // 0 is the empty word, then stream order
  Word word;
};

// x_k bounds rho(G) from above, y_k bounds rho(G/<<w>>) from below.
struct NontrivialCertificate {
  std::size_t k = 0;
  RootBound x;
  RootBound y;
  std::size_t x_n = 0;
  std::size_t y_n = 0;         // walk depth, or words consumed by the sequence
  std::string y_method;        // "quotient-return" or "lower-sequence"
};

struct DecisionOutcome {
  Verdict verdict = Verdict::undecided;
  std::optional<TrivialWitness> witness;
  std::optional<NontrivialCertificate> certificate;
  std::size_t steps = 0;
  std::string trace;  // 'A' and 'B' per step taken
  Promise promise;
};

struct DeciderOptions {
  std::size_t quantum = 64;  // lower-sequence words per B step
  ReturnSeries::Options series;
};

// A, B, A, B, ... with budget entries.
std::string interleave_schedule(std::size_t budget);

// Process A walks through trivial words of G and stops when one equals w
// after free reduction. Process B lowers x_k = min_{n <= k} rho_upper(G, n)
// and raises y_k, a lower bound for rho of the quotient by w: exact returns
// when the quotient is C'(1/6), the lower spectral sequence otherwise.
// x_k < y_k proves w nontrivial. Throws PreconditionError unless p is C'(1/6).
DecisionOutcome decide_trivial(const Presentation& p, const Word& w, std::size_t budget,
                               Promise promise = {}, const DeciderOptions& options = {});

nlohmann::json to_json(const DecisionOutcome& d, const Alphabet& alphabet, unsigned digits = 20);

}  // namespace grouprho
