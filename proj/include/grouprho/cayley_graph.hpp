#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grouprho/dehn.hpp"
#include "grouprho/words.hpp"

namespace grouprho {

using ElementId = std::uint32_t;

// Group elements interned on demand, each with its word length and its
// ShortLex-least geodesic spelling (the normal form).
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::size_t letter_count() const = 0;
  virtual ElementId identity() const = 0;
  virtual ElementId step(ElementId g, Letter l) = 0;
  // g.l if its length does not exceed |g|; never creates longer elements.
  virtual std::optional<ElementId> step_inward(ElementId g, Letter l) = 0;
  virtual std::size_t length(ElementId g) const = 0;
  virtual Word normal_form(ElementId g) const = 0;
  virtual std::size_t element_count() const = 0;

  ElementId evaluate(const Word& w, ElementId from);
  ElementId evaluate(const Word& w) { return evaluate(w, identity()); }
  ElementId multiply(ElementId g, ElementId h);
  ElementId inverse(ElementId g);
  // Word length of g^-1 h.
  std::size_t distance(ElementId g, ElementId h);
};

// Normal forms for C'(1/6) presentations (and free groups, with no
// relators). An element is stored as (parent, last letter) where the parent
// is its normal form minus the last letter.
//
// step(M, t) is resolved by length: with l = |M|, the product lies at length
// l-1, l or l+1. Each case is decided by tracing relator complements from
// prefixes of nf(M).t, using only steps from strictly shorter elements or
// already-resolved weaker cases at length l, so the recursion is
// well-founded. Greendlinger's lemma makes the search complete.
class SmallCancellationOracle final : public GroupOracle {
 public:
  explicit SmallCancellationOracle(const Presentation& p);

  std::size_t letter_count() const override { return _letters; }
  ElementId identity() const override { return 0; }
  ElementId step(ElementId g, Letter l) override;
  std::optional<ElementId> step_inward(ElementId g, Letter l) override;
  std::size_t length(ElementId g) const override { return _nodes[g].level; }
  Word normal_form(ElementId g) const override;
  std::size_t element_count() const override { return _nodes.size(); }

 private:
  static constexpr ElementId kUnknown = 0xFFFFFFFFu;
  static constexpr std::uint8_t kNotDown = 1;
  static constexpr std::uint8_t kNotCross = 2;

  enum class Mode { down, cross, up };

  struct Node {
    ElementId parent;
    std::uint32_t level;
    std::uint8_t last;
  };

  std::optional<ElementId> resolve_down(ElementId m, std::uint8_t t);
  std::optional<ElementId> resolve_cross(ElementId m, std::uint8_t t);
  ElementId resolve_up(ElementId m, std::uint8_t t);
  std::optional<ElementId> trace(ElementId start, const Word& rel, std::size_t stop, Mode mode,
                                 std::uint32_t level);
  void set_edge(ElementId from, std::uint8_t t, ElementId to);
  void normal_form_codes(ElementId g, std::vector<std::uint8_t>& out) const;
  void ancestors(ElementId g, std::vector<ElementId>& out) const;
  ElementId add_node(ElementId parent, std::uint8_t last);

  std::size_t _letters;
  std::vector<Word> _words;
  std::vector<std::vector<std::size_t>> _by_first;
  std::size_t _max_relator = 0;
  std::vector<Node> _nodes;
  std::vector<ElementId> _edges;
  std::vector<std::uint8_t> _flags;
  std::unordered_map<std::uint64_t, ElementId> _children;
};

// Z^d with cube generators; elements are integer vectors.
class ZdCubeOracle final : public GroupOracle {
 public:
  explicit ZdCubeOracle(std::size_t d);

  std::size_t letter_count() const override { return _vectors.size(); }
  ElementId identity() const override { return 0; }
  ElementId step(ElementId g, Letter l) override;
  std::optional<ElementId> step_inward(ElementId g, Letter l) override;
  std::size_t length(ElementId g) const override;
  Word normal_form(ElementId g) const override;
  std::size_t element_count() const override { return _points.size(); }

 private:
  ElementId intern(const std::vector<int>& v);
  static std::size_t level(const std::vector<int>& v);

  std::size_t _d;
  std::vector<std::vector<int>> _vectors;  // by letter code
  std::vector<std::vector<int>> _points;
  std::map<std::vector<int>, ElementId> _index;
};

// Throws PreconditionError for the enumeration strategy.
std::unique_ptr<GroupOracle> make_oracle(const WordProblemStrategy& s);

}  // namespace grouprho
