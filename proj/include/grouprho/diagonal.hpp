#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grouprho/presentation.hpp"
#include "grouprho/rational.hpp"
#include "grouprho/root_bound.hpp"
#include "grouprho/walks.hpp"

namespace grouprho {

// (a^i b^i)^7 over {a, b}.
Word erschler_relator(std::size_t i);
Presentation erschler_presentation(const std::vector<std::size_t>& indices);

// A real x given by rationals a_m <= x <= b_m, a_m nondecreasing and b_m
// nonincreasing in m.
class ComputableRealOracle {
 public:
  virtual ~ComputableRealOracle() = default;
  virtual std::pair<Rational, Rational> enclosure(std::size_t m) const = 0;
  virtual std::string describe() const = 0;
};

class ConstantOracle final : public ComputableRealOracle {
 public:
  explicit ConstantOracle(Rational value) : _value(std::move(value)) {}
  std::pair<Rational, Rational> enclosure(std::size_t) const override { return {_value, _value}; }
  std::string describe() const override;

 private:
  Rational _value;
};

// A finite decimal revealed one digit per precision step: the m-digit
// roundings down and up.
class DecimalOracle final : public ComputableRealOracle {
 public:
  explicit DecimalOracle(std::string text);
  std::pair<Rational, Rational> enclosure(std::size_t m) const override;
  std::string describe() const override { return _text; }

 private:
  std::string _text;
  Rational _value;
};

using OracleList = std::vector<std::shared_ptr<const ComputableRealOracle>>;

struct TargetCertificate {
  std::size_t target = 0;
  Rational a, b;       // enclosure at the step's precision
  Rational gap;        // lower bound for |rho - x_target|
  Rational epsilon;    // the margin the gap had to exceed
};

struct DiagonalStep {
  std::size_t index = 0;  // the accepted l
  std::size_t n = 0;      // walk depth of the rho interval
  std::size_t m = 0;      // oracle precision
  RootBound lo, hi;
  std::vector<TargetCertificate> targets;
  Rational epsilon;       // epsilon for the newly separated target
  std::size_t evaluations = 0;
};

struct DiagonalState {
  std::size_t floor = 0;  // candidates are > max(floor, last index)
  std::vector<std::size_t> indices;
  std::vector<Rational> epsilons;
  std::vector<DiagonalStep> steps;
};

struct DiagonalOptions {
  unsigned digits = 30;  // directed decimals of the rho endpoints
  ReturnSeries::Options series;
};

// Dovetails over triples (j, m, n), l = base + j, ordered by j + m + n, then
// j, then n, where base is the first admissible index. Accepts the first
// triple whose rho interval for <a, b | r_i, i in I u {l}> stays more than
// epsilon_j away from every earlier target and is disjoint from the next
// one; the new epsilon is half of that gap. Returns nullopt when the budget
// of evaluated triples runs out.
std::optional<DiagonalState> diagonal_step(const DiagonalState& state, const OracleList& targets,
                                           std::size_t budget,
                                           const DiagonalOptions& options = {});

// Recomputes the recorded data of one step from scratch and checks it.
bool replay_certificate(const DiagonalState& state, std::size_t step, const OracleList& targets,
                        const DiagonalOptions& options = {});

nlohmann::json to_json(const DiagonalState& state, unsigned digits = 20);

}  // namespace grouprho
