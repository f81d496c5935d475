#include "grouprho/walks.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "grouprho/error.hpp"

namespace grouprho {

namespace {

// Limbs needed to hold base^n.
std::size_t limbs_for_power(std::size_t base, std::size_t n) {
  Integer p = ipow(Integer(static_cast<unsigned long>(base)), n);
  return mpz_sizeinbase(p.get_mpz_t(), 2) / 32 + 1;
}

Integer from_limbs(const std::vector<std::uint32_t>& limbs) {
  Integer r;
  mpz_import(r.get_mpz_t(), limbs.size(), -1, sizeof(std::uint32_t), 0, 0, limbs.data());
  return r;
}

// Runs the walk recursion on a ball, calling `emit(n, planes, limbs)` after
// every step. Planes are limb-major with a zero sentinel lane at index V.
void run_walks(const BallGraph& ball, std::size_t n_max, const WalkOptions& options,
               const std::function<void(std::size_t, const std::vector<std::uint64_t>&,
                                        std::size_t)>& emit) {
  const kernels::KernelSet& k = options.kernels ? *options.kernels : kernels::active_kernels();
  std::size_t v_count = ball.size();
  std::size_t lane = v_count + 1;
  std::size_t deg = ball.letter_count;
  std::vector<std::int32_t> nbr(deg * v_count);
  for (std::size_t j = 0; j < deg; ++j) {
    for (std::size_t v = 0; v < v_count; ++v) {
      std::int32_t w = ball.edges[v * deg + j];
      nbr[j * v_count + v] = w < 0 ? static_cast<std::int32_t>(v_count) : w;
    }
  }
  std::size_t max_limbs = limbs_for_power(std::max<std::size_t>(deg, 1), n_max);
  std::vector<std::uint64_t> cur(max_limbs * lane, 0), next(max_limbs * lane, 0);
  std::vector<std::uint64_t> carry(v_count);
  cur[0] = 1;
  std::size_t limbs = 1;
  emit(0, cur, limbs);
  std::size_t threads = std::max<std::size_t>(1, options.threads);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t new_limbs = limbs_for_power(std::max<std::size_t>(deg, 1), n);
    for (std::size_t l = 0; l < new_limbs; ++l) {
      std::uint64_t* dst = next.data() + l * lane;
      if (l >= limbs) {
        std::fill(dst, dst + lane, 0);
        continue;
      }
      const std::uint64_t* src = cur.data() + l * lane;
      if (threads == 1 || v_count < 4096) {
        k.gather_sum(src, dst, nbr.data(), v_count, v_count, deg);
      } else {
        // Disjoint output ranges; the result does not depend on the split.
        std::vector<std::thread> pool;
        std::size_t chunk = (v_count + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
          std::size_t lo = t * chunk, hi = std::min(v_count, lo + chunk);
          if (lo >= hi) break;
          pool.emplace_back([&, lo, hi] {
            k.gather_sum(src, dst + lo, nbr.data() + lo, hi - lo, v_count, deg);
          });
        }
        for (auto& th : pool) th.join();
      }
      dst[v_count] = 0;
    }
    std::fill(carry.begin(), carry.end(), 0);
    for (std::size_t l = 0; l < new_limbs; ++l) k.carry_step(next.data() + l * lane, carry.data(), v_count);
    if (std::any_of(carry.begin(), carry.end(), [](std::uint64_t c) { return c != 0; })) {
      throw Error("walk count overflow: limb bound violated");
    }
    cur.swap(next);
    limbs = new_limbs;
    emit(n, cur, limbs);
  }
}

}  // namespace

std::size_t WalkTable::return_limit() const { return _radius >= 1 ? 2 * (_radius - 1) : 0; }

Integer WalkTable::count(std::size_t vertex, std::size_t n) const {
  if (n > n_max() || vertex >= _vertices) throw PreconditionError("walk table index out of range");
  std::vector<std::uint32_t> limbs(_limbs[n]);
  for (std::size_t l = 0; l < limbs.size(); ++l) limbs[l] = _columns[n][l * _vertices + vertex];
  return from_limbs(limbs);
}

Integer WalkTable::return_count(std::size_t n) const {
  if (n > return_limit() && n > 0) {
    throw PreconditionError("ball radius too small for return probabilities at n = " + std::to_string(n));
  }
  return count(0, n);
}

Rational WalkTable::return_probability(std::size_t n) const {
  Rational r(return_count(n), ipow(Integer(static_cast<unsigned long>(_letters)), n));
  r.canonicalize();
  return r;
}

std::vector<Integer> WalkTable::distribution(std::size_t n) const {
  if (n > distribution_limit()) {
    throw PreconditionError("ball radius too small for the distribution at n = " + std::to_string(n));
  }
  std::vector<Integer> out(_vertices);
  for (std::size_t v = 0; v < _vertices; ++v) out[v] = count(v, n);
  return out;
}

WalkTable walk_counts(const BallGraph& ball, std::size_t n_max, const WalkOptions& options) {
  WalkTable table;
  table._vertices = ball.size();
  table._letters = ball.letter_count;
  table._radius = ball.radius;
  std::size_t v_count = ball.size();
  run_walks(ball, n_max, options,
            [&](std::size_t, const std::vector<std::uint64_t>& planes, std::size_t limbs) {
              std::vector<std::uint32_t> column(limbs * v_count);
              for (std::size_t l = 0; l < limbs; ++l) {
                for (std::size_t v = 0; v < v_count; ++v) {
                  column[l * v_count + v] = static_cast<std::uint32_t>(planes[l * (v_count + 1) + v]);
                }
              }
              table._limbs.push_back(limbs);
              table._columns.push_back(std::move(column));
            });
  return table;
}

std::vector<Integer> walk_returns(const BallGraph& ball, std::size_t n_max, const WalkOptions& options) {
  std::vector<Integer> out;
  std::size_t lane = ball.size() + 1;
  run_walks(ball, n_max, options,
            [&](std::size_t, const std::vector<std::uint64_t>& planes, std::size_t limbs) {
              std::vector<std::uint32_t> v(limbs);
              for (std::size_t l = 0; l < limbs; ++l) v[l] = static_cast<std::uint32_t>(planes[l * lane]);
              out.push_back(from_limbs(v));
            });
  return out;
}

std::vector<Integer> free_radial_returns(std::size_t rank, std::size_t n_max,
                                         const kernels::KernelSet* kernels) {
  if (rank < 1) throw PreconditionError("free group rank must be at least 1");
  if (2 * rank >= (1u << 16)) throw PreconditionError("free group rank too large");
  const kernels::KernelSet& k = kernels ? *kernels : kernels::active_kernels();
  std::size_t deg = 2 * rank;
  std::size_t count = n_max / 2 + 1;  // distances 0..n_max/2
  std::size_t lane = count + 2;       // zero pad on both sides
  std::vector<std::uint64_t> weight(count, deg - 1);
  weight[0] = 0;
  if (count > 1) weight[1] = deg;
  std::size_t max_limbs = limbs_for_power(deg, n_max);
  std::vector<std::uint64_t> cur(max_limbs * lane, 0), next(max_limbs * lane, 0);
  std::vector<std::uint64_t> carry(count);
  cur[1] = 1;
  std::size_t limbs = 1;
  std::vector<Integer> out{Integer(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t new_limbs = limbs_for_power(deg, n);
    for (std::size_t l = 0; l < new_limbs; ++l) {
      std::uint64_t* dst = next.data() + l * lane;
      std::fill(dst, dst + lane, 0);
      if (l < limbs) k.radial_step(cur.data() + l * lane, dst + 1, weight.data(), count);
    }
    std::fill(carry.begin(), carry.end(), 0);
    for (std::size_t l = 0; l < new_limbs; ++l) k.carry_step(next.data() + l * lane + 1, carry.data(), count);
    cur.swap(next);
    limbs = new_limbs;
    std::vector<std::uint32_t> v(limbs);
    for (std::size_t l = 0; l < limbs; ++l) v[l] = static_cast<std::uint32_t>(cur[l * lane + 1]);
    out.push_back(from_limbs(v));
  }
  return out;
}

Rational free_radial_p(std::size_t rank, std::size_t n) {
  if (n % 2 == 1) return Rational(0);
  std::vector<Integer> r = free_radial_returns(rank, n);
  Rational p(r[n], ipow(Integer(static_cast<unsigned long>(2 * rank)), n));
  p.canonicalize();
  return p;
}

ReturnSeries::ReturnSeries(const WordProblemStrategy& s) : ReturnSeries(s, Options{}) {}

ReturnSeries::ReturnSeries(const WordProblemStrategy& s, Options options)
    : _strategy(s), _options(options) {
  switch (s.kind()) {
    case WordProblemStrategy::Kind::free_group:
      _free_rank = s.parameter();
      _radial_ok = true;
      break;
    case WordProblemStrategy::Kind::dehn:
      _free_rank = s.presentation().generator_count();
      _coincidence = coincidence_radius(s.presentation(), Presentation::free(_free_rank));
      _radial_ok = _free_rank >= 1 && (!_coincidence || options.use_coincidence);
      break;
    case WordProblemStrategy::Kind::zd_cube:
      break;
    case WordProblemStrategy::Kind::enumeration:
      throw PreconditionError("return probabilities need a decidable word problem");
  }
}

std::string ReturnSeries::method(std::size_t n) const {
  std::size_t need = (n + 1) / 2 + 1;
  if (_strategy.kind() == WordProblemStrategy::Kind::free_group) return "free-radial";
  if (_radial_ok && (!_coincidence || need <= *_coincidence)) {
    return _coincidence ? "free-coincident" : "free-radial";
  }
  return "ball";
}

void ReturnSeries::ensure_radial(std::size_t n) {
  if (_radial.size() > n) return;
  std::size_t target = std::max(n, 2 * _radial.size());
  _radial = free_radial_returns(_free_rank, target);
}

void ReturnSeries::ensure_ball(std::size_t n) {
  if (_ball_values.size() > n) return;
  std::size_t radius = (n + 1) / 2 + 1;
  if (!_oracle) _oracle = make_oracle(_strategy);
  BallOptions bo;
  bo.vertex_cap = _options.vertex_cap;
  BallGraph ball = build_ball(*_oracle, radius, bo);
  WalkOptions wo;
  wo.threads = _options.threads;
  std::size_t limit = 2 * (radius - 1);
  std::vector<Integer> returns = walk_returns(ball, limit, wo);
  _ball_values.clear();
  Integer denom(1);
  for (std::size_t i = 0; i <= limit; ++i) {
    Rational p(returns[i], denom);
    p.canonicalize();
    _ball_values.push_back(p);
    denom *= static_cast<unsigned long>(_strategy.letter_count());
  }
}

Rational ReturnSeries::p(std::size_t n) {
  if (method(n) != "ball") {
    ensure_radial(n);
    Rational r(_radial[n], ipow(Integer(static_cast<unsigned long>(2 * _free_rank)), n));
    r.canonicalize();
    return r;
  }
  ensure_ball(n);
  return _ball_values[n];
}

}  // namespace grouprho
