#include "grouprho/bounds.hpp"

#include "grouprho/error.hpp"

namespace grouprho {

void IntervalEnvelope::add(std::size_t n, const Rational& p2n, const std::string& method) {
  RootBound lo = rho_lower(p2n, n);
  RootBound hi = rho_upper(p2n, n);
  if (_interval.witness.empty()) {
    _interval.lo = lo;
    _interval.hi = hi;
    _interval.lo_n = _interval.hi_n = n;
  } else {
    if (compare(lo, _interval.lo) == std::strong_ordering::greater) {
      _interval.lo = lo;
      _interval.lo_n = n;
    }
    if (compare(hi, _interval.hi) == std::strong_ordering::less) {
      _interval.hi = hi;
      _interval.hi_n = n;
    }
  }
  _interval.witness.push_back({n, p2n, method});
}

CertifiedInterval rho_interval(ReturnSeries& series, std::size_t n_max) {
  if (n_max < 1) throw PreconditionError("rho_interval needs n_max >= 1");
  IntervalEnvelope env;
  for (std::size_t n = 1; n <= n_max; ++n) env.add(n, series.p(2 * n), series.method(2 * n));
  return env.interval();
}

CertifiedInterval rho_interval(const Presentation& p, const WordProblemStrategy& s,
                               std::size_t n_max, ReturnSeries::Options options) {
  if (s.kind() == WordProblemStrategy::Kind::zd_cube ||
      s.kind() == WordProblemStrategy::Kind::enumeration) {
    throw PreconditionError("the certified upper bound needs a C'(1/6) or free presentation");
  }
  if (!check_small_cancellation(p).passes) {
    throw PreconditionError("presentation is not C'(1/6); no certified upper bound");
  }
  if (!(s.presentation().canonical_relators() == p.canonical_relators()) ||
      !(s.alphabet() == p.alphabet())) {
    throw PreconditionError("strategy and presentation disagree");
  }
  ReturnSeries series(s, options);
  return rho_interval(series, n_max);
}

nlohmann::json to_json(const CertifiedInterval& c, unsigned digits) {
  nlohmann::json witness = nlohmann::json::array();
  for (const ReturnWitness& w : c.witness) {
    witness.push_back({{"n", w.n}, {"p2n", to_string(w.p2n)}, {"method", w.method}});
  }
  return nlohmann::json{{"lo", to_json(c.lo, digits)},
                        {"hi", to_json(c.hi, digits)},
                        {"lo_n", c.lo_n},
                        {"hi_n", c.hi_n},
                        {"lo_inequality", "p(2n)^(1/2n) <= rho"},
                        {"hi_inequality", "rho <= ((10n+1)^6 p(2n))^(1/2n)"},
                        {"witness", witness}};
}

}  // namespace grouprho
