#include "grouprho/diagonal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "grouprho/bounds.hpp"
#include "grouprho/error.hpp"

namespace grouprho {

Word erschler_relator(std::size_t i) {
  if (i < 1) throw PreconditionError("relator index must be >= 1");
  Word block;
  for (std::size_t t = 0; t < i; ++t) block.push_back(Letter::generator(0, false));
  for (std::size_t t = 0; t < i; ++t) block.push_back(Letter::generator(1, false));
  return power(block, 7);
}

Presentation erschler_presentation(const std::vector<std::size_t>& indices) {
  std::vector<Word> relators;
  for (std::size_t i : indices) relators.push_back(erschler_relator(i));
  return Presentation(Alphabet::standard(2), relators);
}

std::string ConstantOracle::describe() const { return to_string(_value); }

DecimalOracle::DecimalOracle(std::string text) : _text(std::move(text)), _value(parse_rational(_text)) {}

std::pair<Rational, Rational> DecimalOracle::enclosure(std::size_t m) const {
  unsigned digits = static_cast<unsigned>(std::min<std::size_t>(m, 4096));
  return {decimal_round(_value, digits, Rounding::down), decimal_round(_value, digits, Rounding::up)};
}

namespace {

struct Bracket {
  RootBound lo, hi;
};

struct Candidate {
  bool admissible = false;
  std::vector<std::size_t> indices;
  std::unique_ptr<ReturnSeries> series;
  IntervalEnvelope envelope;
  std::vector<Bracket> by_depth;  // by_depth[n - 1]
  std::size_t depth_cap = SIZE_MAX;  // first depth whose ball exceeded the cap

  const Bracket& at(std::size_t n) {
    while (by_depth.size() < n) {
      std::size_t d = by_depth.size() + 1;
      envelope.add(d, series->p(2 * d), series->method(2 * d));
      by_depth.push_back({envelope.interval().lo, envelope.interval().hi});
    }
    return by_depth[n - 1];
  }
};

// Distance lower bound between [lo, hi] and [a, b]; <= 0 when they may meet.
Rational gap(const Rational& lo, const Rational& hi, const Rational& a, const Rational& b) {
  return std::max(Rational(lo - b), Rational(a - hi));
}

std::size_t first_candidate(const DiagonalState& state) {
  std::size_t base = state.floor;
  if (!state.indices.empty()) base = std::max(base, state.indices.back());
  return base + 1;
}

// Checks one (candidate, n, m) triple; fills `step` on success.
bool certify(const Bracket& bracket, std::size_t n, std::size_t m, const DiagonalState& state,
             const OracleList& targets, const DiagonalOptions& options, DiagonalStep& step) {
  const std::size_t k = state.indices.size();
  Rational lo = decimal_bound(bracket.lo, options.digits, Rounding::down);
  Rational hi = decimal_bound(bracket.hi, options.digits, Rounding::up);
  std::vector<TargetCertificate> certs;
  for (std::size_t j = 0; j <= k; ++j) {
    auto [a, b] = targets[j]->enclosure(m);
    Rational g = gap(lo, hi, a, b);
    Rational eps = j < k ? state.epsilons[j] : Rational(0);
    if (g <= eps) return false;
    certs.push_back({j, a, b, g, eps});
  }
  step.n = n;
  step.m = m;
  step.lo = bracket.lo;
  step.hi = bracket.hi;
  step.epsilon = certs.back().gap / 2;
  step.targets = std::move(certs);
  return true;
}

}  // namespace

std::optional<DiagonalState> diagonal_step(const DiagonalState& state, const OracleList& targets,
                                           std::size_t budget, const DiagonalOptions& options) {
  const std::size_t k = state.indices.size();
  if (targets.size() < k + 1) throw PreconditionError("diagonal step needs one more target");
  if (state.epsilons.size() != k) throw PreconditionError("inconsistent diagonal state");
  const std::size_t base = first_candidate(state);

  std::map<std::size_t, Candidate> candidates;
  auto candidate = [&](std::size_t l) -> Candidate& {
    auto it = candidates.find(l);
    if (it != candidates.end()) return it->second;
    Candidate& c = candidates[l];
    c.indices = state.indices;
    c.indices.push_back(l);
    Presentation p = erschler_presentation(c.indices);
    c.admissible = check_small_cancellation(p).passes;
    if (c.admissible) c.series = std::make_unique<ReturnSeries>(WordProblemStrategy::dehn(p), options.series);
    return c;
  };

  std::size_t evaluations = 0;
  for (std::size_t s = 2;; ++s) {
    for (std::size_t j = 0; j + 2 <= s; ++j) {
      for (std::size_t n = 1; j + n + 1 <= s; ++n) {
        if (evaluations == budget) return std::nullopt;
        ++evaluations;
        const std::size_t m = s - j - n;
        Candidate& c = candidate(base + j);
        if (!c.admissible || n >= c.depth_cap) continue;
        const Bracket* bracket = nullptr;
        try {
          bracket = &c.at(n);
        } catch (const ResourceLimit&) {
          c.depth_cap = n;
          continue;
        }
        DiagonalStep step;
        if (!certify(*bracket, n, m, state, targets, options, step)) continue;
        step.index = base + j;
        step.evaluations = evaluations;
        DiagonalState next = state;
        next.indices.push_back(step.index);
        next.epsilons.push_back(step.epsilon);
        next.steps.push_back(std::move(step));
        return next;
      }
    }
  }
}

bool replay_certificate(const DiagonalState& state, std::size_t step_index,
                        const OracleList& targets, const DiagonalOptions& options) {
  if (step_index >= state.steps.size() || step_index >= state.indices.size()) return false;
  const DiagonalStep& step = state.steps[step_index];
  std::vector<std::size_t> indices(state.indices.begin(), state.indices.begin() + step_index + 1);
  if (indices.back() != step.index) return false;
  Presentation p = erschler_presentation(indices);
  if (!check_small_cancellation(p).passes) return false;
  if (targets.size() < step_index + 1) return false;

  CertifiedInterval ci = rho_interval(p, WordProblemStrategy::dehn(p), step.n, options.series);
  if (!(ci.lo == step.lo) || !(ci.hi == step.hi)) return false;

  DiagonalState before;
  before.indices.assign(indices.begin(), indices.end() - 1);
  before.epsilons.assign(state.epsilons.begin(), state.epsilons.begin() + step_index);
  DiagonalStep again;
  if (!certify(Bracket{ci.lo, ci.hi}, step.n, step.m, before, targets, options, again)) return false;
  if (again.epsilon != step.epsilon || again.epsilon != state.epsilons[step_index]) return false;
  if (again.targets.size() != step.targets.size()) return false;
  for (std::size_t j = 0; j < again.targets.size(); ++j) {
    const auto& x = again.targets[j];
    const auto& y = step.targets[j];
    if (x.a != y.a || x.b != y.b || x.gap != y.gap || x.epsilon != y.epsilon) return false;
  }
  return true;
}

nlohmann::json to_json(const DiagonalState& state, unsigned digits) {
  nlohmann::json steps = nlohmann::json::array();
  for (const DiagonalStep& s : state.steps) {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : s.targets) {
      certs.push_back({{"target", c.target},
                       {"a", to_string(c.a)},
                       {"b", to_string(c.b)},
                       {"gap", to_string(c.gap)},
                       {"gap_decimal", to_decimal(c.gap, digits, Rounding::down)},
                       {"epsilon", to_string(c.epsilon)}});
    }
    steps.push_back({{"index", s.index},
                     {"n", s.n},
                     {"m", s.m},
                     {"lo", to_json(s.lo, digits)},
                     {"hi", to_json(s.hi, digits)},
                     {"epsilon", to_string(s.epsilon)},
                     {"epsilon_decimal", to_decimal(s.epsilon, digits, Rounding::down)},
                     {"evaluations", s.evaluations},
                     {"certificates", certs}});
  }
  return nlohmann::json{{"floor", state.floor}, {"indices", state.indices}, {"steps", steps}};
}

}  // namespace grouprho
