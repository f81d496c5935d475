#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "grouprho/error.hpp"
#include "grouprho/presentation.hpp"
#include "helpers.hpp"

using namespace grouprho;
using namespace grouprho::testing;

namespace {

std::string invert_chars(const std::string& t) {
  std::string r(t.rbegin(), t.rend());
  for (char& c : r) c = std::islower(c) ? std::toupper(c) : std::tolower(c);
  return r;
}

// Largest |piece|/|r| over relators, from the definition: all rotations of
// r and r^-1 as strings, pairwise common prefixes of distinct strings.
std::pair<std::size_t, std::size_t> worst_ratio_brute(const std::vector<std::string>& relators) {
  std::vector<std::pair<std::string, std::size_t>> sym;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (const std::string& base : {relators[i], invert_chars(relators[i])}) {
      for (std::size_t k = 0; k < base.size(); ++k) sym.emplace_back(base.substr(k) + base.substr(0, k), i);
    }
  }
  std::size_t best_num = 0, best_den = 1;
  for (const auto& [u, i] : sym) {
    std::size_t longest = 0;
    for (const auto& [v, j] : sym) {
      if (u == v) continue;
      std::size_t l = 0;
      while (l < u.size() && l < v.size() && u[l] == v[l]) ++l;
      longest = std::max(longest, l);
    }
    if (longest * best_den > best_num * u.size()) {
      best_num = longest;
      best_den = u.size();
    }
  }
  return {best_num, best_den};
}

Rational ratio(std::pair<std::size_t, std::size_t> r) {
  Rational q(r.first, r.second);
  q.canonicalize();
  return q;
}

std::string expand(const std::string& text) { return s(w(text)); }

}  // namespace

TEST_CASE("genus-2 relator passes with worst ratio 1/8") {
  Presentation p = make("abcd", {"abABcdCD"});
  CancellationReport r = check_small_cancellation(p);
  CHECK(r.passes);
  CHECK(r.worst_ratio == Rational(1, 8));
  CHECK(ratio(worst_ratio_brute({"abABcdCD"})) == r.worst_ratio);
}

TEST_CASE("(a^i b^i)^7 family passes C'(1/6)") {
  std::vector<std::string> rels;
  for (int i = 1; i <= 12; ++i) rels.push_back("(a^" + std::to_string(i) + " b^" + std::to_string(i) + ")^7");
  Presentation p = make("ab", rels);
  CHECK(p.relators().size() == 12);
  CancellationReport r = check_small_cancellation(p);
  CHECK(r.passes);
  std::vector<std::string> expanded;
  for (const auto& t : rels) expanded.push_back(expand(t));
  CHECK(ratio(worst_ratio_brute(expanded)) == r.worst_ratio);
  CHECK(r.worst_ratio < Rational(1, 6));
}

TEST_CASE("{aabb, aab} fails") {
  Presentation p = make("ab", {"aabb", "aab"});
  CancellationReport r = check_small_cancellation(p);
  CHECK_FALSE(r.passes);
  CHECK(ratio(worst_ratio_brute({"aabb", "aab"})) == r.worst_ratio);
}

TEST_CASE("brute-force pieces agree on assorted presentations") {
  const std::vector<std::vector<std::string>> cases = {
      {"a^7"}, {"abAB"}, {"aabbAB"}, {"abababAB", "aBBa"}, {"(ab)^7", "(a^2 b^2)^7"}, {"a^2", "b^3", "(ab)^5"}};
  for (const auto& rels : cases) {
    Presentation p = make("ab", rels);
    std::vector<std::string> expanded;
    for (const Word& r : p.relators()) expanded.push_back(s(r));
    CAPTURE(to_text(p));
    CHECK(ratio(worst_ratio_brute(expanded)) == check_small_cancellation(p).worst_ratio);
  }
}

TEST_CASE("relators are cyclically reduced and deduplicated") {
  Presentation p = make("ab", {"bab^-1", "a", "BAb", "aA"});
  REQUIRE(p.relators().size() == 1);
  CHECK(s(p.relators()[0]) == "a");
  Presentation q = make("ab", {"abAB"});
  Presentation r = make("ab", {"BAba"});
  CHECK(q.canonical_relators() == r.canonical_relators());
  CHECK(q.fingerprint() == r.fingerprint());
  CHECK(q.fingerprint() != Presentation::free(2).fingerprint());
}

TEST_CASE("presentation text format") {
  Presentation p = parse_presentation("# comment\n\ngenerators: a, b\n(ab)^7\n  # another\naab\n");
  CHECK(p.generator_count() == 2);
  CHECK(p.relators().size() == 2);
  CHECK(parse_presentation(to_text(p)).canonical_relators() == p.canonical_relators());
  CHECK_THROWS_AS(parse_presentation("a^7\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: a\nb\n"), ParseError);
  try {
    parse_presentation("generators: a\naa(\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 16);
  }
}

TEST_CASE("proper powers") {
  CHECK(is_proper_power(w("(ab)^7")));
  CHECK_FALSE(is_proper_power(w("abAB")));
  CHECK(check_small_cancellation(make("ab", {"(ab)^7"})).proper_power_flags[0]);
}
