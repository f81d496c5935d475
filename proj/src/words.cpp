#include "grouprho/words.hpp"

#include <algorithm>
#include <cctype>

#include "grouprho/error.hpp"

namespace grouprho {

namespace {
constexpr std::size_t kMaxParsedLength = 50'000'000;
}

Alphabet::Alphabet(std::string names) : _names(std::move(names)) {
  if (_names.size() > 26) throw PreconditionError("at most 26 generators are supported");
  for (std::size_t i = 0; i < _names.size(); ++i) {
    char c = _names[i];
    if (c < 'a' || c > 'z') {
      throw PreconditionError(std::string("generator name must be a lowercase letter: '") + c + "'");
    }
    if (_names.find(c, i + 1) != std::string::npos) {
      throw PreconditionError(std::string("duplicate generator name '") + c + "'");
    }
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  if (rank > 26) throw PreconditionError("at most 26 generators are supported");
  std::string names;
  for (std::size_t i = 0; i < rank; ++i) names += static_cast<char>('a' + i);
  return Alphabet(names);
}

char Alphabet::to_char(Letter l) const {
  char c = _names.at(l.generator_index());
  return l.sign() > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

bool Alphabet::from_char(char c, Letter& out) const {
  bool inverse = c >= 'A' && c <= 'Z';
  char lower = inverse ? static_cast<char>(c - 'A' + 'a') : c;
  auto pos = _names.find(lower);
  if (pos == std::string::npos || lower < 'a' || lower > 'z') return false;
  out = Letter::generator(static_cast<unsigned>(pos), inverse);
  return true;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : _text(text), _alphabet(alphabet) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (_pos != _text.size()) {
      throw ParseError(std::string("unexpected character '") + _text[_pos] + "'", _pos);
    }
    return w;
  }

 private:
  void skip_space() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) ++_pos;
  }

  Word word() {
    Word w;
    for (;;) {
      skip_space();
      if (_pos >= _text.size() || _text[_pos] == ')') return w;
      w.append(factor());
      if (w.size() > kMaxParsedLength) throw ParseError("word too long", _pos);
    }
  }

  Word factor() {
    Word a = atom();
    skip_space();
    if (_pos < _text.size() && _text[_pos] == '^') {
      ++_pos;
      skip_space();
      long long k = integer();
      Word base = k < 0 ? invert(a) : a;
      unsigned long long count = static_cast<unsigned long long>(k < 0 ? -k : k);
      if (count * base.size() > kMaxParsedLength) throw ParseError("word too long", _pos);
      return power(base, static_cast<std::size_t>(count));
    }
    return a;
  }

  Word atom() {
    std::size_t start = _pos;
    char c = _text[_pos];
    if (c == '(') {
      ++_pos;
      Word inner = word();
      if (_pos >= _text.size() || _text[_pos] != ')') throw ParseError("missing ')'", start);
      ++_pos;
      return inner;
    }
    Letter l;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!_alphabet.from_char(c, l)) {
        throw ParseError(std::string("unknown letter '") + c + "'", _pos);
      }
      ++_pos;
      return Word{l};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", _pos);
  }

  long long integer() {
    std::size_t start = _pos;
    bool negative = false;
    if (_pos < _text.size() && _text[_pos] == '-') {
      negative = true;
      ++_pos;
    }
    long long v = 0;
    bool any = false;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      v = v * 10 + (_text[_pos] - '0');
      if (v > static_cast<long long>(kMaxParsedLength)) throw ParseError("exponent too large", start);
      ++_pos;
      any = true;
    }
    if (!any) throw ParseError("expected an integer exponent", start);
    return negative ? -v : v;
  }

  std::string_view _text;
  const Alphabet& _alphabet;
  std::size_t _pos = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s += alphabet.to_char(l);
  return s;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == r[j - 1].inverse()) {
    ++i;
    --j;
  }
  return r.subword(i, j - i);
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = w[i].inverse();
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word power(const Word& w, std::size_t k) {
  Word r;
  r.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) r.append(w);
  return r;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != w.back().inverse());
}

Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  shift %= w.size();
  Word r = w.subword(shift, w.size() - shift);
  r.append(w.subword(0, shift));
  return r;
}

std::size_t common_prefix_length(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return i;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l.code() + 1u;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace grouprho
