#include "grouprho/cayley_graph.hpp"

#include <algorithm>
#include <cstdlib>

#include "grouprho/error.hpp"

namespace grouprho {

ElementId GroupOracle::evaluate(const Word& w, ElementId from) {
  ElementId g = from;
  for (Letter l : w) g = step(g, l);
  return g;
}

ElementId GroupOracle::multiply(ElementId g, ElementId h) { return evaluate(normal_form(h), g); }

ElementId GroupOracle::inverse(ElementId g) { return evaluate(invert(normal_form(g))); }

std::size_t GroupOracle::distance(ElementId g, ElementId h) {
  return length(multiply(inverse(g), h));
}

SmallCancellationOracle::SmallCancellationOracle(const Presentation& p)
    : _letters(p.letter_count()) {
  if (!p.relators().empty() && !check_small_cancellation(p).passes) {
    throw PreconditionError("normal forms need a C'(1/6) presentation");
  }
  _words = symmetrize(p).distinct_words;
  _by_first.resize(_letters);
  for (std::size_t i = 0; i < _words.size(); ++i) {
    _by_first[_words[i].front().code()].push_back(i);
    _max_relator = std::max(_max_relator, _words[i].size());
  }
  _nodes.push_back({0, 0, 0xFF});
  _edges.assign(_letters, kUnknown);
  _flags.assign(_letters, 0);
}

ElementId SmallCancellationOracle::add_node(ElementId parent, std::uint8_t last) {
  ElementId id = static_cast<ElementId>(_nodes.size());
  if (id == kUnknown) throw ResourceLimit("element table full");
  _nodes.push_back({parent, _nodes[parent].level + 1, last});
  _edges.resize(_edges.size() + _letters, kUnknown);
  _flags.resize(_flags.size() + _letters, 0);
  _children.emplace((static_cast<std::uint64_t>(parent) << 8) | last, id);
  set_edge(parent, last, id);
  return id;
}

void SmallCancellationOracle::set_edge(ElementId from, std::uint8_t t, ElementId to) {
  _edges[static_cast<std::size_t>(from) * _letters + t] = to;
  _edges[static_cast<std::size_t>(to) * _letters + (t ^ 1u)] = from;
}

void SmallCancellationOracle::normal_form_codes(ElementId g, std::vector<std::uint8_t>& out) const {
  out.resize(_nodes[g].level);
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = _nodes[g].last;
    g = _nodes[g].parent;
  }
}

void SmallCancellationOracle::ancestors(ElementId g, std::vector<ElementId>& out) const {
  out.resize(_nodes[g].level + 1);
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = g;
    g = _nodes[g].parent;
  }
}

Word SmallCancellationOracle::normal_form(ElementId g) const {
  std::vector<std::uint8_t> codes;
  normal_form_codes(g, codes);
  Word w;
  w.reserve(codes.size());
  for (std::uint8_t c : codes) w.push_back(Letter::from_code(c));
  return w;
}

ElementId SmallCancellationOracle::step(ElementId g, Letter l) {
  std::uint8_t t = l.code();
  ElementId known = _edges[static_cast<std::size_t>(g) * _letters + t];
  if (known != kUnknown) return known;
  if (auto d = resolve_down(g, t)) return *d;
  if (auto c = resolve_cross(g, t)) return *c;
  return resolve_up(g, t);
}

std::optional<ElementId> SmallCancellationOracle::step_inward(ElementId g, Letter l) {
  std::uint8_t t = l.code();
  ElementId known = _edges[static_cast<std::size_t>(g) * _letters + t];
  if (known != kUnknown) {
    if (_nodes[known].level <= _nodes[g].level) return known;
    return std::nullopt;
  }
  if (auto d = resolve_down(g, t)) return d;
  return resolve_cross(g, t);
}

// Follows the inverse of rel[stop..) read backwards, i.e. the letters
// rel[n-1]^-1, ..., rel[stop]^-1, starting at `start`. Fails as soon as an
// element above the allowed level appears or a step would need a case that
// is not yet known to be well-founded.
std::optional<ElementId> SmallCancellationOracle::trace(ElementId start, const Word& rel,
                                                        std::size_t stop, Mode mode,
                                                        std::uint32_t level) {
  std::uint32_t bound = mode == Mode::down ? level - 1 : level;
  ElementId cur = start;
  if (_nodes[cur].level > bound) return std::nullopt;
  for (std::size_t j = rel.size(); j > stop; --j) {
    Letter c = rel[j - 1].inverse();
    ElementId next;
    if (_nodes[cur].level < level) {
      next = step(cur, c);
    } else {
      // Only reachable for cross and up modes, where cur sits at `level`.
      std::optional<ElementId> r = resolve_down(cur, c.code());
      if (!r && mode == Mode::up) r = resolve_cross(cur, c.code());
      if (!r) return std::nullopt;
      next = *r;
    }
    if (_nodes[next].level > bound) return std::nullopt;
    cur = next;
  }
  return cur;
}

std::optional<ElementId> SmallCancellationOracle::resolve_down(ElementId m, std::uint8_t t) {
  std::size_t slot = static_cast<std::size_t>(m) * _letters + t;
  if (_edges[slot] != kUnknown) {
    ElementId e = _edges[slot];
    if (_nodes[e].level < _nodes[m].level) return e;
    return std::nullopt;
  }
  if (_flags[slot] & kNotDown) return std::nullopt;
  std::uint32_t level = _nodes[m].level;
  if (level > 0 && _nodes[m].last == (t ^ 1u)) {
    ElementId p = _nodes[m].parent;
    set_edge(m, t, p);
    return p;
  }
  if (level > 0) {
    std::vector<std::uint8_t> u;
    normal_form_codes(m, u);
    u.push_back(t);
    std::vector<ElementId> anc;
    ancestors(m, anc);
    std::size_t n = u.size();
    std::size_t first = n > _max_relator ? n - _max_relator : 0;
    // Start positions i <= level-1 keep the trace start below `level`.
    for (std::size_t i = first; i + 1 <= level; ++i) {
      std::size_t k = n - i;
      for (std::size_t idx : _by_first[u[i]]) {
        const Word& w = _words[idx];
        if (w.size() < k) continue;
        bool match = true;
        for (std::size_t j = 1; j < k && match; ++j) match = w[j].code() == u[i + j];
        if (!match) continue;
        if (auto x = trace(anc[i], w, k, Mode::down, level)) {
          set_edge(m, t, *x);
          return x;
        }
      }
    }
  }
  _flags[static_cast<std::size_t>(m) * _letters + t] |= kNotDown;
  return std::nullopt;
}

std::optional<ElementId> SmallCancellationOracle::resolve_cross(ElementId m, std::uint8_t t) {
  std::size_t slot = static_cast<std::size_t>(m) * _letters + t;
  if (_edges[slot] != kUnknown) {
    ElementId e = _edges[slot];
    if (_nodes[e].level == _nodes[m].level) return e;
    return std::nullopt;
  }
  if (_flags[slot] & kNotCross) return std::nullopt;
  std::uint32_t level = _nodes[m].level;
  std::vector<std::uint8_t> u;
  normal_form_codes(m, u);
  u.push_back(t);
  std::vector<ElementId> anc;
  ancestors(m, anc);
  std::size_t n = u.size();
  std::size_t first = n > _max_relator ? n - _max_relator : 0;
  for (std::size_t i = first; i < n; ++i) {
    std::size_t k = n - i;
    for (std::size_t idx : _by_first[u[i]]) {
      const Word& w = _words[idx];
      if (w.size() < k) continue;
      bool match = true;
      for (std::size_t j = 1; j < k && match; ++j) match = w[j].code() == u[i + j];
      if (!match) continue;
      auto x = trace(anc[i], w, k, Mode::cross, level);
      if (x && _nodes[*x].level == level) {
        set_edge(m, t, *x);
        return x;
      }
    }
  }
  _flags[static_cast<std::size_t>(m) * _letters + t] |= kNotCross;
  return std::nullopt;
}

ElementId SmallCancellationOracle::resolve_up(ElementId m, std::uint8_t t) {
  std::uint32_t level = _nodes[m].level;
  std::vector<std::uint8_t> u;
  normal_form_codes(m, u);
  u.push_back(t);
  std::vector<ElementId> anc;
  ancestors(m, anc);
  std::size_t n = u.size();
  std::size_t first = n > _max_relator ? n - _max_relator : 0;

  struct Spelling {
    ElementId parent;
    std::uint8_t last;
  };
  std::vector<Spelling> spellings{{m, t}};
  std::vector<std::uint8_t> best_nf(u.begin(), u.end() - 1);
  std::size_t best = 0;
  std::vector<std::uint8_t> cand_nf;
  for (std::size_t i = first; i < n; ++i) {
    std::size_t k = n - i;
    for (std::size_t idx : _by_first[u[i]]) {
      const Word& w = _words[idx];
      if (w.size() <= k) continue;
      bool match = true;
      for (std::size_t j = 1; j < k && match; ++j) match = w[j].code() == u[i + j];
      if (!match) continue;
      auto p = trace(anc[i], w, k + 1, Mode::up, level);
      if (!p || _nodes[*p].level != level) continue;
      std::uint8_t last = w[k].inverse().code();
      spellings.push_back({*p, last});
      normal_form_codes(*p, cand_nf);
      bool smaller = cand_nf < best_nf ||
                     (cand_nf == best_nf && last < spellings[best].last);
      if (smaller) {
        best = spellings.size() - 1;
        best_nf = cand_nf;
      }
    }
  }
  Spelling s = spellings[best];
  std::uint64_t key = (static_cast<std::uint64_t>(s.parent) << 8) | s.last;
  auto it = _children.find(key);
  ElementId x = it != _children.end() ? it->second : add_node(s.parent, s.last);
  for (const Spelling& sp : spellings) set_edge(sp.parent, sp.last, x);
  return x;
}

ZdCubeOracle::ZdCubeOracle(std::size_t d) : _d(d) {
  WordProblemStrategy s = WordProblemStrategy::zd_cube(d);
  for (std::size_t code = 0; code < s.letter_count(); ++code) {
    _vectors.push_back(s.cube_vector(Letter::from_code(static_cast<std::uint8_t>(code))));
  }
  intern(std::vector<int>(d, 0));
}

std::size_t ZdCubeOracle::level(const std::vector<int>& v) {
  std::size_t m = 0;
  for (int x : v) m = std::max<std::size_t>(m, static_cast<std::size_t>(std::abs(x)));
  return m;
}

ElementId ZdCubeOracle::intern(const std::vector<int>& v) {
  auto [it, inserted] = _index.emplace(v, static_cast<ElementId>(_points.size()));
  if (inserted) _points.push_back(v);
  return it->second;
}

ElementId ZdCubeOracle::step(ElementId g, Letter l) {
  std::vector<int> v = _points[g];
  const std::vector<int>& s = _vectors[l.code()];
  for (std::size_t j = 0; j < _d; ++j) v[j] += s[j];
  return intern(v);
}

std::optional<ElementId> ZdCubeOracle::step_inward(ElementId g, Letter l) {
  std::vector<int> v = _points[g];
  const std::vector<int>& s = _vectors[l.code()];
  for (std::size_t j = 0; j < _d; ++j) v[j] += s[j];
  if (level(v) > level(_points[g])) return std::nullopt;
  return intern(v);
}

std::size_t ZdCubeOracle::length(ElementId g) const { return level(_points[g]); }

Word ZdCubeOracle::normal_form(ElementId g) const {
  // Greedy: the smallest first letter that leaves a geodesic remainder.
  std::vector<int> rest = _points[g];
  Word w;
  while (level(rest) > 0) {
    std::size_t target = level(rest) - 1;
    for (std::size_t code = 0; code < _vectors.size(); ++code) {
      std::vector<int> r = rest;
      for (std::size_t j = 0; j < _d; ++j) r[j] -= _vectors[code][j];
      if (level(r) == target) {
        w.push_back(Letter::from_code(static_cast<std::uint8_t>(code)));
        rest = std::move(r);
        break;
      }
    }
  }
  return w;
}

std::unique_ptr<GroupOracle> make_oracle(const WordProblemStrategy& s) {
  switch (s.kind()) {
    case WordProblemStrategy::Kind::dehn:
    case WordProblemStrategy::Kind::free_group:
      return std::make_unique<SmallCancellationOracle>(s.presentation());
    case WordProblemStrategy::Kind::zd_cube:
      return std::make_unique<ZdCubeOracle>(s.parameter());
    case WordProblemStrategy::Kind::enumeration:
      break;
  }
  throw PreconditionError("the enumeration strategy cannot build Cayley balls");
}

}  // namespace grouprho
