#include <doctest.h>

#include <cmath>
#include <set>

#include "grouprho/ball.hpp"
#include "grouprho/dehn.hpp"
#include "grouprho/enumeration.hpp"
#include "helpers.hpp"

using namespace grouprho;
using namespace grouprho::testing;

namespace {

// Number of words of length n over {a, A, b, B} that cancel to nothing.
unsigned long count_free_trivial(std::size_t n) {
  unsigned long count = 0;
  std::vector<std::size_t> digits(n, 0);
  const std::string letters = "aAbB";
  while (true) {
    std::string t;
    for (std::size_t d : digits) t += letters[d];
    std::string stack;
    for (char c : t) {
      if (!stack.empty() && stack.back() != c && std::tolower(stack.back()) == std::tolower(c)) {
        stack.pop_back();
      } else {
        stack.push_back(c);
      }
    }
    if (stack.empty()) ++count;
    std::size_t i = 0;
    while (i < n && ++digits[i] == 4) digits[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("free group stream starts with the length-2 cancellations") {
  TrivialWordStream stream(Presentation::free(2));
  CHECK(s(stream.next()) == "aA");
  CHECK(s(stream.next()) == "Aa");
  CHECK(s(stream.next()) == "bB");
  CHECK(s(stream.next()) == "Bb");
  std::set<Word> seen;
  std::size_t length4 = 0;
  for (int i = 0; i < 28; ++i) {
    Word x = stream.next();
    CHECK(free_reduce(x).empty());
    CHECK(seen.insert(x).second);
    if (x.size() == 4) ++length4;
  }
  CHECK(length4 == count_free_trivial(4));
}

TEST_CASE("relators and their conjugates appear early") {
  TrivialWordStream z7(make("a", {"a^7"}));
  bool found = false;
  for (int i = 0; i < 5 && !found; ++i) found = z7.next() == w("a^7", "a");
  CHECK(found);
  CHECK(z7.round() == 1);

  TrivialWordStream lazy(make("ab", {"a"}));
  found = false;
  for (int i = 0; i < 200 && !found; ++i) found = lazy.next() == w("baB");
  CHECK(found);
}

TEST_CASE("emitted words are trivial and distinct") {
  for (const Presentation& p : {make("a", {"a^5"}), make("abcd", {"abABcdCD"}), make("ab", {"(ab)^7"})}) {
    WordProblemStrategy s = WordProblemStrategy::dehn(p);
    TrivialWordStream stream(p);
    std::set<Word> seen;
    for (int i = 0; i < 400; ++i) {
      Word x = stream.next();
      CHECK(is_trivial(x, s));
      CHECK(seen.insert(x).second);
    }
  }
}

TEST_CASE("padding covers unreduced trivial words") {
  // <a | a^3>: aaa is a product, aAaaa needs padding
  TrivialWordStream stream(make("a", {"a^3"}));
  bool found = false;
  for (int i = 0; i < 2000 && !found; ++i) found = stream.next() == w("aAaaa", "a");
  CHECK(found);
}

TEST_CASE("lower spectral sequence on F_2") {
  CHECK(lower_spectral_sequence(Presentation::free(2), 1) == RootBound(Rational(1, 16), 2));
  CHECK(lower_spectral_sequence(Presentation::free(2), 1) == RootBound(Rational(1, 4), 1));
  RootBound x4 = lower_spectral_sequence(Presentation::free(2), 4);
  CHECK(compare(x4, Rational(1, 2)) != std::strong_ordering::less);
  const unsigned long c4 = count_free_trivial(4);
  CHECK(c4 == 28);
  RootBound x32 = lower_spectral_sequence(Presentation::free(2), 4 + c4);
  CHECK(compare(x32, RootBound(Rational(c4, 256), 4)) != std::strong_ordering::less);

  LowerSpectralSequence seq(Presentation::free(2));
  RootBound prev;
  for (int k = 1; k <= 300; ++k) {
    RootBound x = seq.advance();
    CHECK(compare(x, prev) != std::strong_ordering::less);
    // the free group's returns bound every x_k: (2092/65536)^(1/8) once length 8 appears
    CHECK(compare(x, RootBound(Rational(3, 4), 2)) == std::strong_ordering::less);
    prev = x;
  }
}

TEST_CASE("delta pairs split trivial words") {
  DeltaPairStream pairs(Presentation::free(2));
  auto p0 = pairs.next(), p1 = pairs.next(), p2 = pairs.next();
  CHECK(p0 == std::make_pair(Word(), w("aA")));
  CHECK(p1 == std::make_pair(w("a"), w("a")));
  CHECK(p2 == std::make_pair(w("aA"), Word()));

  DeltaPairStream z7(make("a", {"a^7"}));
  bool found = false;
  for (int i = 0; i < 100 && !found; ++i) {
    auto [v, u] = z7.next();
    found = v == w("aaaa", "a") && u == w("AAA", "a");
  }
  CHECK(found);
}

TEST_CASE("quotient approximation") {
  QuotientApprox q(4, 2);
  CHECK(q.class_count(1) == 5);
  CHECK(q.class_count(2) == 21);
  Interval h = q.entropy_upper_term(1);
  Interval log4 = Interval::log(Integer(4));
  CHECK(h.possibly_leq(log4));
  CHECK(log4.possibly_leq(h));

  CHECK(q.refine(w("a"), Word()));
  CHECK(q.refine(w("A"), Word()));
  CHECK_FALSE(q.refine(w("a"), w("A")));
  CHECK(q.class_count(1) == 3);
  CHECK_FALSE(q.refine(w("aaa"), Word()));  // too long, consumed without effect
  CHECK(q.pairs_consumed() == 4);
  // classes of length-1 words {a, A}, {b}, {B}: -(1/2) log(1/2) - 2 (1/4) log(1/4)
  Interval h1 = q.entropy_upper_term(1);
  double expected = 0.5 * std::log(2.0) + 0.5 * std::log(4.0);
  CHECK(std::abs(std::stod(h1.decimal(12, Rounding::down)) - expected) < 1e-10);
}

TEST_CASE("quotient class counts only decrease and stay above the true ball size") {
  Presentation p = make("ab", {"(ab)^2"});
  QuotientApprox q(4, 3);
  DeltaPairStream pairs(p);
  std::size_t prev = q.class_count(3);
  for (int i = 0; i < 2000; ++i) {
    auto [v, u] = pairs.next();
    q.refine(v, u);
    std::size_t now = q.class_count(3);
    CHECK(now <= prev);
    prev = now;
  }
  std::size_t beta3 = build_ball(WordProblemStrategy::dehn(p), 3).ball_size(3);
  CHECK(prev >= beta3);
}
