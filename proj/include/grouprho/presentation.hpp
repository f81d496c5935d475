#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouprho/rational.hpp"
#include "grouprho/words.hpp"

namespace grouprho {

// ShortLex-least word among the cyclic shifts of r and of r^-1. Two relators
// define the same normal-closure generator set entry iff these agree.
Word canonical_cyclic_form(const Word& r);

class Presentation {
 public:
  Presentation() = default;
  // Relators are cyclically reduced; empty ones are dropped and duplicates
  // (up to rotation and inversion) are removed, keeping the first.
  Presentation(Alphabet alphabet, const std::vector<Word>& relators);

  static Presentation free(std::size_t rank);

  const Alphabet& alphabet() const { return _alphabet; }
  const std::vector<Word>& relators() const { return _relators; }
  std::size_t generator_count() const { return _alphabet.generator_count(); }
  std::size_t letter_count() const { return _alphabet.letter_count(); }

  Presentation with_relator(const Word& r) const;

  // Sorted canonical forms; equal for presentations with the same relator set.
  std::vector<Word> canonical_relators() const;
  // Stable 64-bit FNV-1a hash of the alphabet and canonical relators.
  std::uint64_t fingerprint() const;

 private:
  Alphabet _alphabet;
  std::vector<Word> _relators;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);
std::string to_text(const Presentation& p);

struct Occurrence {
  std::size_t relator;
  std::size_t shift;
  bool inverted;
  Word word;
};

struct SymmetrizedSet {
  std::size_t relator_count = 0;
  std::vector<Occurrence> occurrences;
  std::vector<Word> distinct_words;  // ShortLex order
};

SymmetrizedSet symmetrize(const Presentation& p);

struct Piece {
  Word word;  // empty when the relator meets no piece
  std::size_t relator = 0;
};

// Longest piece contained in each relator (a prefix of one of the relator's
// symmetrized words shared with a different symmetrized word).
std::vector<Piece> max_pieces(const SymmetrizedSet& sym);

struct CancellationReport {
  bool passes = true;
  Rational lambda;
  // Relator with the largest |piece|/|r|, ties to the lowest index. Absent
  // only when there are no relators.
  std::optional<Piece> worst;
  Rational worst_ratio;  // 0 when there is no piece at all
  std::vector<std::size_t> max_piece_lengths;
  std::vector<bool> proper_power_flags;
};

CancellationReport check_small_cancellation(const Presentation& p,
                                            const Rational& lambda = Rational(1, 6));

bool is_proper_power(const Word& w);

}  // namespace grouprho
