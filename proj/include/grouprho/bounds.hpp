#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grouprho/dehn.hpp"
#include "grouprho/root_bound.hpp"
#include "grouprho/walks.hpp"

namespace grouprho {

struct ReturnWitness {
  std::size_t n;  // p(2n) was used
  Rational p2n;
  std::string method;
};

// lo = max_n p(2n)^(1/2n); hi = min_n ((10n+1)^6 p(2n))^(1/2n), n <= n_max.
struct CertifiedInterval {
  RootBound lo;
  RootBound hi;
  std::size_t lo_n = 0;
  std::size_t hi_n = 0;
  std::vector<ReturnWitness> witness;
};

// Running envelopes fed one p(2n) at a time.
class IntervalEnvelope {
 public:
  void add(std::size_t n, const Rational& p2n, const std::string& method = {});
  bool empty() const { return _interval.witness.empty(); }
  const CertifiedInterval& interval() const { return _interval; }

 private:
  CertifiedInterval _interval;
};

// The upper side needs the rapid decay constant of C'(1/6) groups, so the
// presentation must pass the small cancellation check.
CertifiedInterval rho_interval(const Presentation& p, const WordProblemStrategy& s,
                               std::size_t n_max, ReturnSeries::Options options = {});
CertifiedInterval rho_interval(ReturnSeries& series, std::size_t n_max);

nlohmann::json to_json(const CertifiedInterval& c, unsigned digits = 20);

}  // namespace grouprho
