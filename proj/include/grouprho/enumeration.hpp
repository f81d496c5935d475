#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grouprho/interval.hpp"
#include "grouprho/presentation.hpp"
#include "grouprho/root_bound.hpp"
#include "grouprho/words.hpp"

namespace grouprho {

// Enumerates words that are trivial in <S | R>, without repetition.
//
// Round m = 1, 2, ... first emits every freely reduced nonempty product of
// at most m conjugates g r^{+-1} g^-1 (g freely reduced, |g| <= m), in order
// of arity, then lexicographically by conjugate index. It then emits, by
// length and lexicographically, every word of length <= m whose free
// reduction is empty or was already emitted.
class TrivialWordStream {
 public:
  explicit TrivialWordStream(const Presentation& p);

  Word next();
  std::size_t emitted_count() const { return _emitted_count; }
  std::size_t round() const { return _round; }

 private:
  enum class Phase { products, padding };

  void start_round();
  bool next_product(Word& out);
  bool next_padding(Word& out);
  bool padding_reachable(const std::vector<Letter>& reduced, std::size_t remaining) const;
  bool accept(const Word& w);

  Presentation _presentation;
  std::size_t _letters;
  std::size_t _round = 0;
  std::size_t _emitted_count = 0;
  Phase _phase = Phase::products;

  std::vector<Word> _conjugates;
  std::vector<std::size_t> _tuple;  // current product, as conjugate indices
  bool _tuple_fresh = false;

  // Padding search state: a DFS over words of the current target length.
  std::size_t _pad_length = 0;
  std::vector<std::uint8_t> _pad_choice;
  std::vector<Letter> _pad_word;
  std::vector<std::vector<Letter>> _pad_reduced;  // reduced prefix per depth
  std::vector<Word> _pad_targets;

  std::unordered_set<Word, WordHash> _emitted;
  std::unordered_set<Word, WordHash> _emitted_reduced;
};

// Running x_k: the maximum over lengths n of (c_n / |S|^n)^(1/n), where c_n
// counts emitted trivial words of length n among the first k.
class LowerSpectralSequence {
 public:
  explicit LowerSpectralSequence(const Presentation& p);

  // Consumes one more trivial word and returns the updated x_k.
  const RootBound& advance();
  const RootBound& current() const { return _current; }
  std::size_t k() const { return _k; }

 private:
  TrivialWordStream _stream;
  std::size_t _letters;
  std::size_t _k = 0;
  std::map<std::size_t, Integer> _counts;
  RootBound _current;
};

RootBound lower_spectral_sequence(const Presentation& p, std::size_t k);

// Splits of emitted trivial words: t = v.u yields (v, u^-1), for every split
// position in order, word after word.
class DeltaPairStream {
 public:
  explicit DeltaPairStream(const Presentation& p) : _stream(p) {}

  std::pair<Word, Word> next();
  // Number of trivial words fully or partially consumed.
  std::size_t words_consumed() const { return _stream.emitted_count(); }

 private:
  TrivialWordStream _stream;
  Word _current;
  std::size_t _split = 0;
  bool _have = false;
};

// Union-find over all words of length <= n over |S| letters.
class QuotientApprox {
 public:
  QuotientApprox(std::size_t letter_count, std::size_t n);

  std::size_t max_length() const { return _n; }
  std::size_t pairs_consumed() const { return _k; }

  // Merges the classes of v and w if both have length <= n; either way the
  // pair counts as consumed. Returns true if two classes merged.
  bool refine(const Word& v, const Word& w);
  // Number of classes meeting S^{<=m}, m <= n.
  std::size_t class_count(std::size_t m);
  // -sum over classes A of S^m of (|A|/|S|^m) log(|A|/|S|^m), enclosed.
  Interval entropy_upper_term(std::size_t m);

  std::size_t index(const Word& w) const;

 private:
  std::size_t find(std::size_t x);

  std::size_t _letters;
  std::size_t _n;
  std::size_t _k = 0;
  std::vector<std::size_t> _offset;  // first index of each length
  std::vector<std::uint32_t> _parent;
  std::vector<std::uint32_t> _size;
};

}  // namespace grouprho
