#include <doctest.h>

#include <sstream>

#include "grouprho/ball.hpp"
#include "grouprho/walks.hpp"
#include "helpers.hpp"

using namespace grouprho;
using namespace grouprho::testing;

namespace {

// N(e; n) by running every word of length n through the word problem.
Integer brute_returns(const WordProblemStrategy& s, std::size_t n) {
  const std::size_t k = s.letter_count();
  std::vector<std::size_t> digits(n, 0);
  Integer count(0);
  while (true) {
    Word x;
    for (std::size_t d : digits) x.push_back(Letter::from_code(static_cast<std::uint8_t>(d)));
    if (is_trivial(x, s)) ++count;
    std::size_t i = 0;
    while (i < n && ++digits[i] == k) digits[i++] = 0;
    if (i == n) break;
  }
  return count;
}

WordProblemStrategy strategy_for(const Presentation& p) {
  return p.relators().empty() ? WordProblemStrategy::free_group(p.generator_count())
                              : WordProblemStrategy::dehn(p);
}

}  // namespace

TEST_CASE("walk counts agree with brute force over all words") {
  const std::vector<std::pair<Presentation, std::size_t>> cases = {
      {make("ab", {}), 6}, {make("a", {}), 8}, {make("a", {"a^7"}), 8},
      {make("abcd", {"abABcdCD"}), 4}, {make("ab", {"(a^3 b^3)^7"}), 6}, {make("ab", {"(ab)^3"}), 6}};
  for (const auto& [p, n_max] : cases) {
    WordProblemStrategy s = strategy_for(p);
    BallGraph ball = build_ball(s, n_max / 2 + 1);
    WalkTable t = walk_counts(ball, n_max);
    CAPTURE(to_text(p));
    for (std::size_t n = 0; n <= n_max; ++n) {
      CAPTURE(n);
      CHECK(t.return_count(n) == brute_returns(s, n));
    }
  }
}

TEST_CASE("known return probabilities") {
  WalkTable f2 = walk_counts(build_ball(WordProblemStrategy::free_group(2), 3), 4);
  CHECK(f2.return_probability(2) == Rational(1, 4));
  CHECK(f2.return_probability(4) == Rational(7, 64));
  WalkTable z = walk_counts(build_ball(WordProblemStrategy::free_group(1), 2), 2);
  CHECK(z.return_probability(2) == Rational(1, 2));
  CHECK(free_radial_p(2, 0) == 1);
  CHECK(free_radial_p(2, 3) == 0);
}

TEST_CASE("walk mass is conserved and returns are supermultiplicative") {
  Presentation p = make("abcd", {"abABcdCD"});
  WalkTable t = walk_counts(build_ball(WordProblemStrategy::dehn(p), 5), 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    Integer total(0);
    for (const Integer& c : t.distribution(n)) total += c;
    CHECK(total == ipow(Integer(8), n));
  }
  const std::size_t limit = std::min(t.n_max(), t.return_limit());
  for (std::size_t m = 0; m <= limit; ++m) {
    for (std::size_t n = 0; m + n <= limit; ++n) {
      CHECK(t.return_probability(m + n) >= t.return_probability(m) * t.return_probability(n));
    }
  }
  for (std::size_t n = 0; 2 * n <= limit; ++n) CHECK(t.return_probability(2 * n) > 0);
}

TEST_CASE("radial recursion equals walk counts on F_k") {
  for (std::size_t rank : {1u, 2u, 3u}) {
    WalkTable t = walk_counts(build_ball(WordProblemStrategy::free_group(rank), rank == 3 ? 6 : 12), 12);
    for (std::size_t n = 0; n <= std::min<std::size_t>(12, t.return_limit()); ++n) {
      CHECK(free_radial_p(rank, n) == t.return_probability(n));
    }
  }
}

TEST_CASE("walk_returns, threads and kernel sets agree") {
  Presentation p = make("ab", {"(ab)^5"});
  BallGraph ball = build_ball(WordProblemStrategy::dehn(p), 7);
  WalkTable t = walk_counts(ball, 12);
  std::vector<Integer> one = walk_returns(ball, 12);
  WalkOptions four;
  four.threads = 4;
  CHECK(walk_returns(ball, 12, four) == one);
  WalkOptions scalar;
  scalar.kernels = &kernels::scalar_kernels();
  CHECK(walk_returns(ball, 12, scalar) == one);
  WalkTable t4 = walk_counts(ball, 12, four);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(one[n] == t.return_count(n));
    CHECK(t4.distribution(std::min<std::size_t>(n, 7)) == t.distribution(std::min<std::size_t>(n, 7)));
  }
}

TEST_CASE("return validity radius: radius n/2+1 matches radius n") {
  Presentation p = make("ab", {"(ab)^4"});
  WordProblemStrategy s = WordProblemStrategy::dehn(p);
  WalkTable big = walk_counts(build_ball(s, 10), 10);
  for (std::size_t n = 2; n <= 10; n += 2) {
    WalkTable small = walk_counts(build_ball(s, n / 2 + 1), n);
    CHECK(small.return_count(n) == big.return_count(n));
  }
}

TEST_CASE("return series methods agree") {
  Presentation p = make("ab", {"(a^2 b^2)^7"});
  WordProblemStrategy s = WordProblemStrategy::dehn(p);
  ReturnSeries fast(s);
  ReturnSeries::Options o;
  o.use_coincidence = false;
  ReturnSeries slow(s, o);
  for (std::size_t n = 2; n <= 16; n += 2) {
    CHECK(fast.method(n) == "free-coincident");
    CHECK(slow.method(n) == "ball");
    CHECK(fast.p(n) == slow.p(n));
  }
  CHECK(fast.method(40) == "ball");
}

TEST_CASE("Z^d walk counts") {
  for (std::size_t d = 1; d <= 3; ++d) {
    WordProblemStrategy s = WordProblemStrategy::zd_cube(d);
    WalkTable t = walk_counts(build_ball(s, 3), 4);
    CHECK(t.return_probability(2) == Rational(1, 1ul << d));
    CHECK(t.return_count(4) == brute_returns(s, 4));
  }
}

TEST_CASE("ball cache round trip") {
  Presentation p = make("abcd", {"abABcdCD"});
  BallGraph ball = build_ball(WordProblemStrategy::dehn(p), 3);
  std::stringstream buf;
  save_ball(ball, p.fingerprint(), buf);
  BallGraph back = load_ball(buf, p.fingerprint());
  CHECK(same_labeled_ball(ball, back));
  CHECK(back.vertices == ball.vertices);
  std::stringstream again;
  save_ball(ball, p.fingerprint(), again);
  CHECK_THROWS(load_ball(again, p.fingerprint() + 1));

  auto dir = std::filesystem::temp_directory_path() / "grouprho_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  BallCache cache(dir);
  CHECK_FALSE(cache.find(p.fingerprint(), 3).has_value());
  cache.store(p.fingerprint(), ball);
  auto found = cache.find(p.fingerprint(), 3);
  REQUIRE(found.has_value());
  CHECK(same_labeled_ball(*found, ball));
  std::filesystem::remove_all(dir);
}

TEST_CASE("shortlex geodesics") {
  BallGraph f2 = build_ball(WordProblemStrategy::free_group(2), 3);
  auto find = [](const BallGraph& b, const Word& x) {
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (b.vertices[v] == x) return static_cast<std::uint32_t>(v);
    }
    return 0xFFFFFFFFu;
  };
  auto path = shortlex_geodesic(f2, 0, find(f2, w("ab")));
  REQUIRE(path.size() == 3);
  CHECK(f2.vertices[path[1]] == w("a"));
  CHECK(shortlex_geodesic(f2, 5, 5) == std::vector<std::uint32_t>{5});

  BallGraph z7 = build_ball(WordProblemStrategy::dehn(make("a", {"a^7"})), 3);
  CHECK(z7.size() == 7);
  std::uint32_t a4 = find(z7, w("AAA", "a"));
  REQUIRE(a4 != 0xFFFFFFFFu);
  CHECK(shortlex_geodesic(z7, 0, a4).size() == 4);
}
