#include "grouprho/dehn.hpp"

#include <algorithm>

#include "grouprho/enumeration.hpp"
#include "grouprho/error.hpp"

namespace grouprho {

DehnSolver::DehnSolver(Presentation p) : _presentation(std::move(p)) {
  CancellationReport report = check_small_cancellation(_presentation);
  if (!report.passes) {
    throw PreconditionError("presentation does not satisfy C'(1/6); Dehn's algorithm is not valid");
  }
  _words = symmetrize(_presentation).distinct_words;
  _by_first.resize(_presentation.letter_count());
  for (std::size_t i = 0; i < _words.size(); ++i) _by_first[_words[i].front().code()].push_back(i);
}

Word DehnSolver::reduce(const Word& input) const {
  std::vector<Letter> w = free_reduce(input).letters();
  std::vector<Letter> next;
  for (;;) {
    bool replaced = false;
    for (std::size_t i = 0; i < w.size() && !replaced; ++i) {
      std::size_t best_len = 0;
      const Word* best = nullptr;
      for (std::size_t idx : _by_first[w[i].code()]) {
        const Word& r = _words[idx];
        std::size_t limit = std::min(r.size(), w.size() - i);
        std::size_t k = 0;
        while (k < limit && w[i + k] == r[k]) ++k;
        if (2 * k > r.size() && k > best_len) {
          best_len = k;
          best = &r;
        }
      }
      if (best != nullptr) {
        next.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t j = best->size(); j > best_len; --j) next.push_back((*best)[j - 1].inverse());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + best_len), w.end());
        w = free_reduce(Word(std::move(next))).letters();
        next.clear();
        replaced = true;
      }
    }
    if (!replaced) return Word(std::move(w));
  }
}

bool DehnSolver::is_trivial(const Word& w) const { return reduce(w).empty(); }

Word dehn_reduce(const Word& w, const Presentation& p) { return DehnSolver(p).reduce(w); }

WordProblemStrategy WordProblemStrategy::dehn(const Presentation& p) {
  WordProblemStrategy s;
  s._kind = Kind::dehn;
  s._alphabet = p.alphabet();
  s._solver = std::make_shared<const DehnSolver>(p);
  s._presentation = std::make_shared<const Presentation>(p);
  return s;
}

WordProblemStrategy WordProblemStrategy::free_group(std::size_t rank) {
  WordProblemStrategy s;
  s._kind = Kind::free_group;
  s._alphabet = Alphabet::standard(rank);
  s._parameter = rank;
  s._presentation = std::make_shared<const Presentation>(Presentation::free(rank));
  return s;
}

WordProblemStrategy WordProblemStrategy::zd_cube(std::size_t d) {
  if (d < 1 || d > 5) throw PreconditionError("cube generators are supported for 1 <= d <= 5");
  WordProblemStrategy s;
  s._kind = Kind::zd_cube;
  s._alphabet = Alphabet::standard(std::size_t{1} << (d - 1));
  s._parameter = d;
  return s;
}

WordProblemStrategy WordProblemStrategy::enumeration(const Presentation& p, std::size_t budget) {
  WordProblemStrategy s;
  s._kind = Kind::enumeration;
  s._alphabet = p.alphabet();
  s._parameter = budget;
  s._presentation = std::make_shared<const Presentation>(p);
  return s;
}

const Presentation& WordProblemStrategy::presentation() const {
  if (!_presentation) throw PreconditionError("strategy has no presentation");
  return *_presentation;
}

const DehnSolver& WordProblemStrategy::solver() const {
  if (!_solver) throw PreconditionError("strategy is not Dehn");
  return *_solver;
}

std::vector<int> WordProblemStrategy::cube_vector(Letter l) const {
  std::vector<int> v(_parameter);
  unsigned g = l.generator_index();
  for (std::size_t j = 0; j < _parameter; ++j) {
    int c = (j == 0 || !((g >> (j - 1)) & 1u)) ? 1 : -1;
    v[j] = c * l.sign();
  }
  return v;
}

Triviality decide_word(const Word& w, const WordProblemStrategy& s) {
  for (Letter l : w) {
    if (l.generator_index() >= s.alphabet().generator_count()) {
      throw PreconditionError("word uses a letter outside the alphabet");
    }
  }
  switch (s.kind()) {
    case WordProblemStrategy::Kind::dehn:
      return s.solver().is_trivial(w) ? Triviality::trivial : Triviality::nontrivial;
    case WordProblemStrategy::Kind::free_group:
      return free_reduce(w).empty() ? Triviality::trivial : Triviality::nontrivial;
    case WordProblemStrategy::Kind::zd_cube: {
      std::vector<long long> sum(s.parameter(), 0);
      for (Letter l : w) {
        std::vector<int> v = s.cube_vector(l);
        for (std::size_t j = 0; j < v.size(); ++j) sum[j] += v[j];
      }
      bool zero = std::all_of(sum.begin(), sum.end(), [](long long x) { return x == 0; });
      return zero ? Triviality::trivial : Triviality::nontrivial;
    }
    case WordProblemStrategy::Kind::enumeration: {
      Word target = free_reduce(w);
      if (target.empty()) return Triviality::trivial;
      TrivialWordStream stream(s.presentation());
      for (std::size_t i = 0; i < s.budget(); ++i) {
        if (free_reduce(stream.next()) == target) return Triviality::trivial;
      }
      return Triviality::budget_exhausted;
    }
  }
  return Triviality::nontrivial;
}

bool is_trivial(const Word& w, const WordProblemStrategy& s) {
  Triviality t = decide_word(w, s);
  if (t == Triviality::budget_exhausted) {
    throw PreconditionError("enumeration budget exhausted: triviality not established");
  }
  return t == Triviality::trivial;
}

bool are_equal(const Word& u, const Word& v, const WordProblemStrategy& s) {
  return is_trivial(concat(u, invert(v)), s);
}

std::optional<std::size_t> coincidence_radius(const Presentation& p1, const Presentation& p2) {
  if (!(p1.alphabet() == p2.alphabet())) {
    throw PreconditionError("coincidence radius needs presentations over the same alphabet");
  }
  std::vector<Word> a = p1.canonical_relators();
  std::vector<Word> b = p2.canonical_relators();
  std::vector<Word> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff),
                                shortlex_less);
  if (diff.empty()) return std::nullopt;
  std::size_t shortest = diff.front().size();
  for (const Word& r : diff) shortest = std::min(shortest, r.size());
  return shortest / 2;
}

}  // namespace grouprho
