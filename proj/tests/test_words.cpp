#include <doctest.h>

#include <random>
#include <string>

#include "grouprho/error.hpp"
#include "grouprho/words.hpp"
#include "helpers.hpp"

using namespace grouprho;
using namespace grouprho::testing;

namespace {

// Free reduction on the character level by repeated scanning.
std::string reduce_chars(std::string t) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      char x = t[i], y = t[i + 1];
      if (x != y && std::tolower(x) == std::tolower(y)) {
        t.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return t;
}

std::string random_chars(std::mt19937& rng, std::size_t len) {
  const std::string letters = "aAbB";
  std::string t;
  for (std::size_t i = 0; i < len; ++i) t += letters[rng() % 4];
  return t;
}

}  // namespace

TEST_CASE("letter codes order a < A < b < B") {
  Alphabet ab("ab");
  Word x = w("aAbB");
  CHECK(x[0] < x[1]);
  CHECK(x[1] < x[2]);
  CHECK(x[2] < x[3]);
  CHECK(x[0].inverse() == x[1]);
  CHECK(x[3].generator_index() == 1);
  CHECK(x[3].sign() == -1);
}

TEST_CASE("word grammar") {
  CHECK(s(w("a^3")) == "aaa");
  CHECK(s(w("a^-2")) == "AA");
  CHECK(s(w("(ab)^2")) == "abab");
  CHECK(s(w("(ab)^-1")) == "BA");
  CHECK(s(w("((a b)^2 B)^2")) == "ababBababB");
  CHECK(s(w("a^0 b")) == "b");
  CHECK(s(w("")) == "");
  CHECK(s(w("(a^3 b^3)^7")).size() == 42);
}

TEST_CASE("word parse errors carry positions") {
  Alphabet ab("ab");
  auto position = [&](const std::string& text) -> std::size_t {
    try {
      parse_word(text, ab);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position("abc") == 2);
  CHECK(position("(ab") == 0);
  CHECK(position("a^") == 2);
  CHECK(position("ab)") == 2);
}

TEST_CASE("free reduction matches repeated cancellation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::string t = random_chars(rng, rng() % 20);
    Word x = w(t);
    CAPTURE(t);
    CHECK(s(free_reduce(x)) == reduce_chars(t));
    CHECK(is_freely_reduced(free_reduce(x)));
    CHECK(free_reduce(concat(x, invert(x))).empty());
  }
}

TEST_CASE("cyclic reduction and rotation") {
  CHECK(s(cyclic_reduce(w("baAbB"))) == "b");
  CHECK(s(cyclic_reduce(w("Bab"))) == "a");
  CHECK(is_cyclically_reduced(w("abAB")));
  CHECK_FALSE(is_cyclically_reduced(w("abA")));
  CHECK(s(rotate(w("abAB"), 1)) == "bABa");
  CHECK(s(power(w("ab"), 3)) == "ababab");
  CHECK(common_prefix_length(w("abab"), w("abB")) == 2);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(w("B"), w("aa")));
  CHECK(shortlex_less(w("aA"), w("ab")));
  CHECK(shortlex_less(w("Ab"), w("ba")));
  CHECK_FALSE(shortlex_less(w("ab"), w("ab")));
}
