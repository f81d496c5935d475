#include "grouprho/enumeration.hpp"

#include <algorithm>
#include <unordered_map>

#include "grouprho/error.hpp"

namespace grouprho {

TrivialWordStream::TrivialWordStream(const Presentation& p)
    : _presentation(p), _letters(p.letter_count()) {
  if (_letters == 0) throw PreconditionError("the trivial word stream needs at least one generator");
}

namespace {

// All freely reduced words of length <= m in ShortLex order.
std::vector<Word> reduced_words_up_to(std::size_t letters, std::size_t m) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= m; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t c = 0; c < letters; ++c) {
        Letter l = Letter::from_code(static_cast<std::uint8_t>(c));
        if (!out[i].empty() && out[i].back() == l.inverse()) continue;
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace

void TrivialWordStream::start_round() {
  ++_round;
  _conjugates.clear();
  std::unordered_set<Word, WordHash> seen;
  if (!_presentation.relators().empty()) {
    for (const Word& g : reduced_words_up_to(_letters, _round)) {
      Word gi = invert(g);
      for (const Word& r : _presentation.relators()) {
        for (const Word& re : {r, invert(r)}) {
          Word c = free_reduce(concat(concat(g, re), gi));
          if (seen.insert(c).second) _conjugates.push_back(std::move(c));
        }
      }
    }
  }
  _phase = _conjugates.empty() ? Phase::padding : Phase::products;
  _tuple.assign(1, 0);
  _tuple_fresh = true;
  _pad_length = 0;
}

bool TrivialWordStream::next_product(Word& out) {
  for (;;) {
    if (!_tuple_fresh) {
      // Odometer, last position fastest; then grow the arity.
      std::size_t i = _tuple.size();
      while (i > 0) {
        if (++_tuple[i - 1] < _conjugates.size()) break;
        _tuple[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        if (_tuple.size() >= _round) return false;
        _tuple.assign(_tuple.size() + 1, 0);
      }
    }
    _tuple_fresh = false;
    Word w;
    for (std::size_t idx : _tuple) w.append(_conjugates[idx]);
    w = free_reduce(w);
    if (!w.empty()) {
      out = std::move(w);
      return true;
    }
  }
}

bool TrivialWordStream::padding_reachable(const std::vector<Letter>& reduced,
                                          std::size_t remaining) const {
  Word s(reduced);
  for (const Word& t : _pad_targets) {
    std::size_t lcp = common_prefix_length(s, t);
    std::size_t dist = s.size() + t.size() - 2 * lcp;
    if (dist <= remaining && (remaining - dist) % 2 == 0) return true;
  }
  return false;
}

bool TrivialWordStream::next_padding(Word& out) {
  if (_pad_length == 0) {
    _pad_targets.assign(1, Word{});
    for (const Word& t : _emitted_reduced) {
      if (t.size() <= _round) _pad_targets.push_back(t);
    }
    std::sort(_pad_targets.begin(), _pad_targets.end(), shortlex_less);
    _pad_length = 1;
    _pad_word.clear();
    _pad_choice.assign(1, 0);
    _pad_reduced.assign(1, {});
  }
  std::unordered_set<Word, WordHash> targets(_pad_targets.begin(), _pad_targets.end());
  while (_pad_length <= _round) {
    std::size_t d = _pad_word.size();
    if (d == _pad_length) {
      Word candidate(_pad_word);
      bool hit = targets.count(Word(_pad_reduced[d])) > 0;
      _pad_word.pop_back();
      if (hit) {
        out = std::move(candidate);
        return true;
      }
      continue;
    }
    if (_pad_choice[d] >= _letters) {
      if (d == 0) {
        ++_pad_length;
        _pad_choice.assign(1, 0);
        continue;
      }
      _pad_word.pop_back();
      continue;
    }
    Letter l = Letter::from_code(static_cast<std::uint8_t>(_pad_choice[d]++));
    std::vector<Letter> reduced = _pad_reduced[d];
    if (!reduced.empty() && reduced.back() == l.inverse()) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
    if (!padding_reachable(reduced, _pad_length - d - 1)) continue;
    _pad_word.push_back(l);
    _pad_choice.resize(d + 2);
    _pad_choice[d + 1] = 0;
    _pad_reduced.resize(d + 2);
    _pad_reduced[d + 1] = std::move(reduced);
  }
  return false;
}

bool TrivialWordStream::accept(const Word& w) {
  if (!_emitted.insert(w).second) return false;
  _emitted_reduced.insert(free_reduce(w));
  ++_emitted_count;
  return true;
}

Word TrivialWordStream::next() {
  for (;;) {
    if (_round == 0) start_round();
    Word w;
    if (_phase == Phase::products) {
      if (next_product(w)) {
        if (accept(w)) return w;
        continue;
      }
      _phase = Phase::padding;
      _pad_length = 0;
      continue;
    }
    if (next_padding(w)) {
      if (accept(w)) return w;
      continue;
    }
    start_round();
  }
}

LowerSpectralSequence::LowerSpectralSequence(const Presentation& p)
    : _stream(p), _letters(p.letter_count()) {}

const RootBound& LowerSpectralSequence::advance() {
  Word w = _stream.next();
  ++_k;
  Integer& c = _counts[w.size()];
  c += 1;
  Rational q(c, ipow(Integer(static_cast<unsigned long>(_letters)), w.size()));
  q.canonicalize();
  RootBound candidate(q, w.size());
  if (compare(candidate, _current) == std::strong_ordering::greater) _current = candidate;
  return _current;
}

RootBound lower_spectral_sequence(const Presentation& p, std::size_t k) {
  if (k < 1) throw PreconditionError("lower_spectral_sequence needs k >= 1");
  LowerSpectralSequence seq(p);
  for (std::size_t i = 0; i < k; ++i) seq.advance();
  return seq.current();
}

std::pair<Word, Word> DeltaPairStream::next() {
  if (!_have || _split > _current.size()) {
    _current = _stream.next();
    _split = 0;
    _have = true;
  }
  std::pair<Word, Word> pair{_current.subword(0, _split),
                             invert(_current.subword(_split, _current.size() - _split))};
  ++_split;
  return pair;
}

QuotientApprox::QuotientApprox(std::size_t letter_count, std::size_t n)
    : _letters(letter_count), _n(n) {
  _offset.push_back(0);
  std::size_t level = 1, total = 0;
  for (std::size_t len = 0; len <= n; ++len) {
    total += level;
    if (total > (std::size_t{1} << 31)) throw ResourceLimit("quotient approximation too large");
    _offset.push_back(total);
    level *= letter_count;
  }
  _parent.resize(total);
  _size.assign(total, 1);
  for (std::size_t i = 0; i < total; ++i) _parent[i] = static_cast<std::uint32_t>(i);
}

std::size_t QuotientApprox::index(const Word& w) const {
  std::size_t x = 0;
  for (Letter l : w) x = x * _letters + l.code();
  return _offset[w.size()] + x;
}

std::size_t QuotientApprox::find(std::size_t x) {
  while (_parent[x] != x) {
    _parent[x] = _parent[_parent[x]];
    x = _parent[x];
  }
  return x;
}

bool QuotientApprox::refine(const Word& v, const Word& w) {
  ++_k;
  if (v.size() > _n || w.size() > _n) return false;
  std::size_t a = find(index(v)), b = find(index(w));
  if (a == b) return false;
  if (_size[a] < _size[b] || (_size[a] == _size[b] && b < a)) std::swap(a, b);
  _parent[b] = static_cast<std::uint32_t>(a);
  _size[a] += _size[b];
  return true;
}

std::size_t QuotientApprox::class_count(std::size_t m) {
  if (m > _n) throw PreconditionError("class_count beyond the materialized length");
  std::vector<bool> mark(_parent.size(), false);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < _offset[m + 1]; ++x) {
    std::size_t r = find(x);
    if (!mark[r]) {
      mark[r] = true;
      ++classes;
    }
  }
  return classes;
}

Interval QuotientApprox::entropy_upper_term(std::size_t m) {
  if (m > _n) throw PreconditionError("entropy term beyond the materialized length");
  std::unordered_map<std::size_t, std::uint64_t> sizes;
  for (std::size_t x = _offset[m]; x < _offset[m + 1]; ++x) ++sizes[find(x)];
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  for (const auto& [root, c] : sizes) ++multiplicity[c];
  Integer total = ipow(Integer(static_cast<unsigned long>(_letters)), m);
  Interval sum = Interval::exact(Rational(0));
  for (const auto& [c, mult] : multiplicity) {
    if (c < 2) continue;
    Integer weight = Integer(static_cast<unsigned long>(c)) * static_cast<unsigned long>(mult);
    sum = sum + Interval::log(Integer(static_cast<unsigned long>(c))) * weight;
  }
  return Interval::log(total) - sum / total;
}

}  // namespace grouprho
