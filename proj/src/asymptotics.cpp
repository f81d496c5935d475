#include "grouprho/asymptotics.hpp"

#include <map>

#include "grouprho/enumeration.hpp"
#include "grouprho/error.hpp"
#include "grouprho/walks.hpp"

namespace grouprho {

namespace {

bool has_presentation(const WordProblemStrategy& s) {
  return s.kind() != WordProblemStrategy::Kind::zd_cube;
}

std::size_t sequence_length(const WordProblemStrategy& s, std::size_t n_max,
                            const AsymptoticsOptions& options) {
  if (!has_presentation(s)) return 0;
  return std::min(options.quotient_length, n_max);
}

// Runs the pair stream, calling sample(q) after each block of pairs.
template <typename F>
void run_quotient(const WordProblemStrategy& s, std::size_t length,
                  const AsymptoticsOptions& options, std::vector<std::size_t>& pairs, F sample) {
  if (length == 0) return;
  QuotientApprox q(s.letter_count(), length);
  DeltaPairStream stream(s.presentation());
  for (std::size_t k = 0; k < options.samples; ++k) {
    for (std::size_t i = 0; i < options.pairs_per_sample; ++i) {
      auto [v, w] = stream.next();
      q.refine(v, w);
    }
    pairs.push_back(q.pairs_consumed());
    sample(q);
  }
}

}  // namespace

Interval shannon_entropy(const std::vector<Integer>& counts, const Integer& total) {
  std::map<Integer, unsigned long> multiplicity;
  for (const Integer& c : counts) {
    if (c > 1) ++multiplicity[c];
  }
  Interval sum = Interval::exact(Rational(0));
  for (const auto& [c, mult] : multiplicity) sum = sum + Interval::log(c) * (c * mult);
  return Interval::log(total) - sum / total;
}

GrowthReport growth(const WordProblemStrategy& s, std::size_t n_max,
                    const AsymptoticsOptions& options) {
  if (n_max < 1) throw PreconditionError("growth needs n_max >= 1");
  GrowthReport r;
  BallOptions bo;
  bo.vertex_cap = options.vertex_cap;
  BallGraph ball = build_ball(s, n_max, bo);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Integer beta(static_cast<unsigned long>(ball.ball_size(n)));
    r.exact.emplace_back(n, beta);
    if (n == 0) continue;
    RootBound b(Rational(beta), n);
    if (n == 1 || compare(b, r.upper_envelope) == std::strong_ordering::less) {
      r.upper_envelope = b;
      r.envelope_n = n;
    }
  }
  r.quotient_length = sequence_length(s, n_max, options);
  run_quotient(s, r.quotient_length, options, r.pairs, [&](QuotientApprox& q) {
    RootBound y;
    for (std::size_t n = 1; n <= r.quotient_length; ++n) {
      RootBound b(Rational(Integer(static_cast<unsigned long>(q.class_count(n)))), n);
      if (n == 1 || compare(b, y) == std::strong_ordering::less) y = b;
    }
    r.sequence.push_back(y);
  });
  return r;
}

EntropyReport entropy(const WordProblemStrategy& s, std::size_t n_max,
                      const AsymptoticsOptions& options) {
  if (n_max < 1) throw PreconditionError("entropy needs n_max >= 1");
  EntropyReport r;
  BallOptions bo;
  bo.vertex_cap = options.vertex_cap;
  BallGraph ball = build_ball(s, n_max, bo);
  WalkOptions wo;
  wo.threads = options.threads;
  WalkTable table = walk_counts(ball, n_max, wo);
  Integer letters(static_cast<unsigned long>(s.letter_count()));
  for (std::size_t n = 0; n <= n_max; ++n) {
    Interval h = shannon_entropy(table.distribution(n), ipow(letters, n));
    if (n >= 1) {
      Interval per_step = h / Integer(static_cast<unsigned long>(n));
      r.upper_envelope = n == 1 ? per_step : Interval::min(r.upper_envelope, per_step);
    }
    r.exact.emplace_back(n, std::move(h));
  }
  r.quotient_length = sequence_length(s, n_max, options);
  run_quotient(s, r.quotient_length, options, r.pairs, [&](QuotientApprox& q) {
    Interval x;
    for (std::size_t n = 1; n <= r.quotient_length; ++n) {
      Interval term = q.entropy_upper_term(n) / Integer(static_cast<unsigned long>(n));
      x = n == 1 ? term : Interval::min(x, term);
    }
    r.sequence.push_back(x);
  });
  return r;
}

nlohmann::json to_json(const GrowthReport& r, unsigned digits) {
  nlohmann::json exact = nlohmann::json::array();
  for (const auto& [n, beta] : r.exact) exact.push_back({{"n", n}, {"beta", beta.get_str()}});
  nlohmann::json seq = nlohmann::json::array();
  for (std::size_t k = 0; k < r.sequence.size(); ++k) {
    seq.push_back({{"k", k + 1}, {"pairs", r.pairs[k]}, {"y", to_json(r.sequence[k], digits)}});
  }
  return nlohmann::json{{"exact", exact},
                        {"upper_envelope", to_json(r.upper_envelope, digits)},
                        {"envelope_n", r.envelope_n},
                        {"certified", "upper only"},
                        {"quotient_length", r.quotient_length},
                        {"sequence", seq}};
}

namespace {

nlohmann::json interval_json(const Interval& x, unsigned digits) {
  return nlohmann::json{{"lo", x.decimal(digits, Rounding::down)},
                        {"hi", x.decimal(digits, Rounding::up)}};
}

}  // namespace

nlohmann::json to_json(const EntropyReport& r, unsigned digits) {
  nlohmann::json exact = nlohmann::json::array();
  for (const auto& [n, h] : r.exact) exact.push_back({{"n", n}, {"H", interval_json(h, digits)}});
  nlohmann::json seq = nlohmann::json::array();
  for (std::size_t k = 0; k < r.sequence.size(); ++k) {
    seq.push_back({{"k", k + 1}, {"pairs", r.pairs[k]}, {"x", interval_json(r.sequence[k], digits)}});
  }
  return nlohmann::json{{"exact", exact},
                        {"upper_envelope", interval_json(r.upper_envelope, digits)},
                        {"log", "natural"},
                        {"quotient_length", r.quotient_length},
                        {"sequence", seq}};
}

}  // namespace grouprho
