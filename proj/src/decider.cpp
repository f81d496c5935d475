#include "grouprho/decider.hpp"

#include "grouprho/enumeration.hpp"
#include "grouprho/error.hpp"

namespace grouprho {

std::string interleave_schedule(std::size_t budget) {
  std::string trace(budget, 'A');
  for (std::size_t i = 1; i < budget; i += 2) trace[i] = 'B';
  return trace;
}

DecisionOutcome decide_trivial(const Presentation& p, const Word& w, std::size_t budget,
                               Promise promise, const DeciderOptions& options) {
  if (!check_small_cancellation(p).passes) {
    throw PreconditionError("decide needs a C'(1/6) presentation");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].code() >= p.letter_count()) throw PreconditionError("word is not over the presentation's alphabet");
  }
  DecisionOutcome out;
  out.promise = promise;
  const Word target = free_reduce(w);
  const Presentation quotient = p.with_relator(target);
  const bool quotient_sc = check_small_cancellation(quotient).passes;

  TrivialWordStream trivial(p);
  std::size_t a_steps = 0;

  ReturnSeries upper(WordProblemStrategy::dehn(p), options.series);
  std::optional<ReturnSeries> lower;
  std::optional<LowerSpectralSequence> sequence;
  if (quotient_sc) {
    lower.emplace(WordProblemStrategy::dehn(quotient), options.series);
  } else {
    sequence.emplace(quotient);
  }
  std::size_t k = 0;
  RootBound x, y;
  std::size_t x_n = 0, y_n = 0;

  const std::string schedule = interleave_schedule(budget);
  for (char process : schedule) {
    ++out.steps;
    out.trace.push_back(process);
    if (process == 'A') {
      Word v;
      if (a_steps > 0) v = trivial.next();
      ++a_steps;
      if (free_reduce(v) == target) {
        out.verdict = Verdict::trivial;
        out.witness = TrivialWitness{a_steps - 1, v};
        return out;
      }
      continue;
    }
    ++k;
    RootBound xk = rho_upper(upper.p(2 * k), k);
    if (k == 1 || compare(xk, x) == std::strong_ordering::less) {
      x = xk;
      x_n = k;
    }
    if (lower) {
      RootBound yk = rho_lower(lower->p(2 * k), k);
      if (k == 1 || compare(yk, y) == std::strong_ordering::greater) {
        y = yk;
        y_n = k;
      }
    } else {
      for (std::size_t i = 0; i < options.quantum; ++i) sequence->advance();
      y = sequence->current();
      y_n = sequence->k();
    }
    if (compare(x, y) == std::strong_ordering::less) {
      out.verdict = Verdict::nontrivial;
      out.certificate = NontrivialCertificate{k, x, y, x_n, y_n,
                                              lower ? "quotient-return" : "lower-sequence"};
      return out;
    }
  }
  return out;
}

nlohmann::json to_json(const DecisionOutcome& d, const Alphabet& alphabet, unsigned digits) {
  nlohmann::json j;
  switch (d.verdict) {
    case Verdict::trivial: j["verdict"] = "trivial"; break;
    case Verdict::nontrivial: j["verdict"] = "nontrivial"; break;
    case Verdict::undecided: j["verdict"] = "undecided"; break;
  }
  j["trivial"] = d.verdict == Verdict::trivial ? nlohmann::json(true)
                 : d.verdict == Verdict::nontrivial ? nlohmann::json(false)
                                                     : nlohmann::json(nullptr);
  j["steps"] = d.steps;
  j["promise_declared"] = d.promise.declared;
  if (d.witness) {
    j["witness"] = {{"index", d.witness->index}, {"word", to_string(d.witness->word, alphabet)}};
  }
  if (d.certificate) {
    const auto& c = *d.certificate;
    j["certificate"] = {{"k", c.k},
                        {"x", to_json(c.x, digits)},
                        {"x_n", c.x_n},
                        {"y", to_json(c.y, digits)},
                        {"y_n", c.y_n},
                        {"y_method", c.y_method}};
  }
  return j;
}

}  // namespace grouprho
