#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace grouprho {

// A signed generator. The code is 2*index for the generator and 2*index+1
// for its inverse, so comparing codes gives the letter order a < A < b < B.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l._code = code;
    return l;
  }
  static constexpr Letter generator(unsigned index, bool inverse = false) {
    return from_code(static_cast<std::uint8_t>(2 * index + (inverse ? 1 : 0)));
  }

  constexpr unsigned generator_index() const { return _code >> 1; }
  constexpr int sign() const { return (_code & 1) ? -1 : 1; }
  constexpr std::uint8_t code() const { return _code; }
  constexpr Letter inverse() const { return from_code(_code ^ 1); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t _code = 0;
};

// Generator names: distinct lowercase ASCII letters, at most 26.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string names);

  // The first `rank` letters a, b, c, ...
  static Alphabet standard(std::size_t rank);

  std::size_t generator_count() const { return _names.size(); }
  std::size_t letter_count() const { return 2 * _names.size(); }
  const std::string& names() const { return _names; }

  char to_char(Letter l) const;
  // Returns false if c is not a generator name or the uppercase of one.
  bool from_char(char c, Letter& out) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string _names;
};

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : _letters(letters) {}
  explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
  template <typename It>
  Word(It first, It last) : _letters(first, last) {}

  std::size_t size() const { return _letters.size(); }
  bool empty() const { return _letters.empty(); }
  Letter operator[](std::size_t i) const { return _letters[i]; }
  Letter& operator[](std::size_t i) { return _letters[i]; }
  Letter front() const { return _letters.front(); }
  Letter back() const { return _letters.back(); }
  const_iterator begin() const { return _letters.begin(); }
  const_iterator end() const { return _letters.end(); }

  void push_back(Letter l) { _letters.push_back(l); }
  void pop_back() { _letters.pop_back(); }
  void clear() { _letters.clear(); }
  void reserve(std::size_t n) { _letters.reserve(n); }
  void append(const Word& w) { _letters.insert(_letters.end(), w.begin(), w.end()); }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(_letters.begin() + pos, _letters.begin() + pos + len);
  }
  const std::vector<Letter>& letters() const { return _letters; }

  // Plain lexicographic order; see shortlex_less for the group-theoretic one.
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> _letters;
};

bool shortlex_less(const Word& u, const Word& v);

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Word& w, const Alphabet& alphabet);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, std::size_t k);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Rotation starting at position `shift`.
Word rotate(const Word& w, std::size_t shift);

std::size_t common_prefix_length(const Word& u, const Word& v);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace grouprho
