#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "grouprho/presentation.hpp"
#include "grouprho/words.hpp"

namespace grouprho {

// Dehn's algorithm for a C'(1/6) presentation. Construction verifies the
// small cancellation condition and throws PreconditionError otherwise.
class DehnSolver {
 public:
  explicit DehnSolver(Presentation p);

  // Repeatedly free-reduces and replaces the leftmost (then longest) subword
  // u of a symmetrized relator u.v with 2|u| > |uv| by v^-1.
  Word reduce(const Word& w) const;
  bool is_trivial(const Word& w) const;

  const Presentation& presentation() const { return _presentation; }
  const std::vector<Word>& symmetrized() const { return _words; }

 private:
  Presentation _presentation;
  std::vector<Word> _words;
  // Indices into _words by first-letter code.
  std::vector<std::vector<std::size_t>> _by_first;
};

Word dehn_reduce(const Word& w, const Presentation& p);

enum class Triviality { trivial, nontrivial, budget_exhausted };

class WordProblemStrategy {
 public:
  enum class Kind { dehn, free_group, zd_cube, enumeration };

  static WordProblemStrategy dehn(const Presentation& p);
  static WordProblemStrategy free_group(std::size_t rank);
  // Z^d with the 2^d cube generators (+-1, ..., +-1). Generator i has first
  // coordinate +1 and coordinate j >= 1 equal to -1 iff bit j-1 of i is set.
  static WordProblemStrategy zd_cube(std::size_t d);
  // Semi-decision by enumerating the normal closure; budget counts emitted
  // trivial words.
  static WordProblemStrategy enumeration(const Presentation& p, std::size_t budget);

  Kind kind() const { return _kind; }
  const Alphabet& alphabet() const { return _alphabet; }
  std::size_t letter_count() const { return _alphabet.letter_count(); }
  // Rank for free_group, dimension for zd_cube.
  std::size_t parameter() const { return _parameter; }
  std::size_t budget() const { return _parameter; }
  // Presentation for dehn, free_group and enumeration; throws for zd_cube.
  const Presentation& presentation() const;
  const DehnSolver& solver() const;

  // Coordinates of a zd_cube letter.
  std::vector<int> cube_vector(Letter l) const;

 private:
  WordProblemStrategy() = default;

  Kind _kind = Kind::free_group;
  Alphabet _alphabet;
  std::size_t _parameter = 0;
  std::shared_ptr<const Presentation> _presentation;
  std::shared_ptr<const DehnSolver> _solver;
};

Triviality decide_word(const Word& w, const WordProblemStrategy& s);
// Throws PreconditionError when the strategy cannot settle the question
// (enumeration with an exhausted budget).
bool is_trivial(const Word& w, const WordProblemStrategy& s);
bool are_equal(const Word& u, const Word& v, const WordProblemStrategy& s);

// floor(min |r| / 2) over relators in exactly one of the two presentations;
// nullopt stands for infinity (equal relator sets).
std::optional<std::size_t> coincidence_radius(const Presentation& p1, const Presentation& p2);

}  // namespace grouprho
