#include <doctest.h>

#include <memory>

#include "grouprho/diagonal.hpp"
#include "grouprho/error.hpp"
#include "helpers.hpp"

using namespace grouprho;
using grouprho::testing::s;

namespace {

OracleList demo_targets() {
  return {std::make_shared<ConstantOracle>(Rational(1, 2)), std::make_shared<DecimalOracle>("1.5")};
}

DiagonalState floor_state(std::size_t floor) {
  DiagonalState st;
  st.floor = floor;
  return st;
}

// Number of words of length n over {a, A, b, B} that freely reduce to the
// empty word, by listing all of them.
std::size_t free_returns(std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  std::size_t hits = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Word w;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 4) w.push_back(Letter::from_code(static_cast<std::uint8_t>(c % 4)));
    if (free_reduce(w).empty()) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("relator family") {
  CHECK(s(erschler_relator(1)) == "ababababababab");
  CHECK(s(erschler_relator(2)) == "aabbaabbaabbaabbaabbaabbaabb");
  for (std::size_t i = 1; i <= 12; ++i) CHECK(erschler_relator(i).size() == 14 * i);
  CHECK_THROWS_AS(erschler_relator(0), PreconditionError);

  Presentation p = erschler_presentation({5, 6});
  CHECK(p.relators().size() == 2);
  CHECK(check_small_cancellation(p).passes);
}

TEST_CASE("decimal oracle encloses monotonically") {
  DecimalOracle x("0.1234");
  Rational v(617, 5000);
  Rational prev_lo = -1, prev_hi = 2;
  Rational ten_m = 1;
  for (std::size_t m = 0; m <= 12; ++m) {
    auto [a, b] = x.enclosure(m);
    CHECK(a <= v);
    CHECK(v <= b);
    CHECK(prev_lo <= a);
    CHECK(b <= prev_hi);
    CHECK((b - a) * ten_m <= 1);
    prev_lo = a;
    prev_hi = b;
    ten_m *= 10;
  }
  CHECK(x.enclosure(2) == std::pair<Rational, Rational>(Rational(3, 25), Rational(13, 100)));
  CHECK(x.enclosure(4).first == v);
  CHECK(x.enclosure(4).second == v);

  ConstantOracle c(Rational(1, 3));
  CHECK(c.enclosure(0).first == Rational(1, 3));
  CHECK(c.enclosure(50).second == Rational(1, 3));
}

TEST_CASE("first step separates the constant 1/2") {
  OracleList targets = demo_targets();
  auto next = diagonal_step(floor_state(4), targets, 100);
  REQUIRE(next);
  REQUIRE(next->steps.size() == 1);
  const DiagonalStep& st = next->steps[0];
  CHECK(st.index == 5);
  CHECK(next->indices == std::vector<std::size_t>{5});

  // The free walk returns 28 times out of 256 at length 4, and the relators
  // of length 70 do not interfere at that depth, so the lower endpoint at
  // n = 2 is (28/256)^(1/4).
  CHECK(free_returns(4) == 28);
  CHECK(free_returns(2) == 4);
  CHECK(st.n == 2);
  CHECK(compare(st.lo, RootBound(Rational(28, 256), 4)) == std::strong_ordering::equal);

  REQUIRE(st.targets.size() == 1);
  const TargetCertificate& c = st.targets[0];
  CHECK(c.a == Rational(1, 2));
  CHECK(c.b == Rational(1, 2));
  CHECK(c.gap > 0);
  CHECK(st.epsilon == c.gap / 2);
  CHECK(compare(st.lo, Rational(1, 2) + c.gap) != std::strong_ordering::less);
  CHECK(compare(st.lo, st.hi) != std::strong_ordering::greater);
  CHECK(replay_certificate(*next, 0, targets));
}

TEST_CASE("two steps stay apart from both targets and replay") {
  OracleList targets = demo_targets();
  auto one = diagonal_step(floor_state(4), targets, 20000);
  REQUIRE(one);
  auto two = diagonal_step(*one, targets, 20000);
  REQUIRE(two);
  CHECK(two->indices == std::vector<std::size_t>{5, 6});
  REQUIRE(two->steps.size() == 2);
  const DiagonalStep& st = two->steps[1];
  REQUIRE(st.targets.size() == 2);
  Rational eps0 = two->epsilons[0];
  CHECK(st.targets[0].epsilon == eps0);
  CHECK(st.targets[0].gap > eps0);
  CHECK(st.targets[1].gap > 0);
  // The new interval lies above 1/2 + eps0 and below 3/2.
  CHECK(compare(st.lo, Rational(1, 2) + eps0) == std::strong_ordering::greater);
  CHECK(compare(st.hi, Rational(3, 2) - st.targets[1].gap) != std::strong_ordering::greater);
  CHECK(st.evaluations <= 20000);
  CHECK(replay_certificate(*two, 0, targets));
  CHECK(replay_certificate(*two, 1, targets));

  auto again = diagonal_step(*one, targets, 20000);
  REQUIRE(again);
  CHECK(to_json(*again).dump() == to_json(*two).dump());
}

TEST_CASE("tampered certificates fail replay") {
  OracleList targets = demo_targets();
  auto next = diagonal_step(floor_state(4), targets, 100);
  REQUIRE(next);
  REQUIRE(replay_certificate(*next, 0, targets));

  DiagonalState bad = *next;
  bad.steps[0].epsilon += Rational(1, 1000);
  CHECK_FALSE(replay_certificate(bad, 0, targets));

  bad = *next;
  bad.epsilons[0] = Rational(1, 100);
  CHECK_FALSE(replay_certificate(bad, 0, targets));

  bad = *next;
  bad.steps[0].n += 1;
  CHECK_FALSE(replay_certificate(bad, 0, targets));

  bad = *next;
  bad.steps[0].targets[0].gap = Rational(1, 5);
  CHECK_FALSE(replay_certificate(bad, 0, targets));

  bad = *next;
  bad.indices[0] = 6;
  CHECK_FALSE(replay_certificate(bad, 0, targets));

  OracleList other{std::make_shared<ConstantOracle>(Rational(2, 5))};
  CHECK_FALSE(replay_certificate(*next, 0, other));
  CHECK_FALSE(replay_certificate(*next, 1, targets));
}

TEST_CASE("budget and preconditions") {
  OracleList targets = demo_targets();
  // The first triple is (l, m, n) = (5, 1, 1), where the lower endpoint is
  // exactly 1/2.
  CHECK_FALSE(diagonal_step(floor_state(4), targets, 0));
  CHECK_FALSE(diagonal_step(floor_state(4), targets, 1));

  OracleList none;
  CHECK_THROWS_AS(diagonal_step(floor_state(4), none, 10), PreconditionError);
  DiagonalState inconsistent = floor_state(4);
  inconsistent.indices = {5};
  CHECK_THROWS_AS(diagonal_step(inconsistent, targets, 10), PreconditionError);
}

TEST_CASE("diagonal json") {
  OracleList targets = demo_targets();
  auto next = diagonal_step(floor_state(4), targets, 100);
  REQUIRE(next);
  nlohmann::json j = to_json(*next, 10);
  CHECK(j["floor"] == 4);
  CHECK(j["indices"][0] == 5);
  CHECK(j["steps"][0]["n"] == 2);
  CHECK(j["steps"][0]["certificates"][0]["a"] == "1/2");
}
