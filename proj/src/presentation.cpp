#include "grouprho/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "grouprho/error.hpp"

namespace grouprho {

Word canonical_cyclic_form(const Word& r) {
  Word best;
  bool have = false;
  for (const Word& base : {r, invert(r)}) {
    for (std::size_t s = 0; s < std::max<std::size_t>(base.size(), 1); ++s) {
      Word c = rotate(base, s);
      if (!have || shortlex_less(c, best)) {
        best = std::move(c);
        have = true;
      }
    }
  }
  return best;
}

Presentation::Presentation(Alphabet alphabet, const std::vector<Word>& relators)
    : _alphabet(std::move(alphabet)) {
  std::vector<Word> seen;
  for (const Word& raw : relators) {
    for (Letter l : raw) {
      if (l.generator_index() >= _alphabet.generator_count()) {
        throw PreconditionError("relator uses a letter outside the alphabet");
      }
    }
    Word r = cyclic_reduce(raw);
    if (r.empty()) continue;
    Word key = canonical_cyclic_form(r);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    _relators.push_back(std::move(r));
  }
}

Presentation Presentation::free(std::size_t rank) {
  return Presentation(Alphabet::standard(rank), {});
}

Presentation Presentation::with_relator(const Word& r) const {
  std::vector<Word> rels = _relators;
  rels.push_back(r);
  return Presentation(_alphabet, rels);
}

std::vector<Word> Presentation::canonical_relators() const {
  std::vector<Word> out;
  for (const Word& r : _relators) out.push_back(canonical_cyclic_form(r));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::uint64_t Presentation::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](unsigned v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (char c : _alphabet.names()) mix(static_cast<unsigned char>(c));
  for (const Word& r : canonical_relators()) {
    mix(0xFFu);
    for (Letter l : r) mix(l.code() + 1u);
  }
  return h;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> relators;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    std::string content = trim(line);
    std::size_t lead = line.find_first_not_of(" \t\r");
    std::size_t line_start = offset + (lead == std::string_view::npos ? 0 : lead);
    if (!content.empty() && content[0] != '#') {
      if (!alphabet) {
        const std::string prefix = "generators:";
        if (content.rfind(prefix, 0) != 0) {
          throw ParseError("presentation must start with 'generators:'", line_start);
        }
        std::string names;
        for (std::size_t i = prefix.size(); i < content.size(); ++i) {
          char c = content[i];
          if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
          if (c < 'a' || c > 'z') {
            throw ParseError(std::string("bad generator name '") + c + "'", line_start + i);
          }
          names += c;
        }
        try {
          alphabet = Alphabet(names);
        } catch (const PreconditionError& e) {
          throw ParseError(e.what(), line_start);
        }
      } else {
        try {
          relators.push_back(parse_word(content, *alphabet));
        } catch (const ParseError& e) {
          throw ParseError(std::string("relator: ") + e.what(), line_start + e.position());
        }
      }
    }
    if (end == text.size()) break;
    offset = end + 1;
  }
  if (!alphabet) throw ParseError("missing 'generators:' line", 0);
  return Presentation(*alphabet, relators);
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string to_text(const Presentation& p) {
  std::string s = "generators:";
  const std::string& names = p.alphabet().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    s += i == 0 ? " " : ", ";
    s += names[i];
  }
  s += '\n';
  for (const Word& r : p.relators()) s += to_string(r, p.alphabet()) + "\n";
  return s;
}

SymmetrizedSet symmetrize(const Presentation& p) {
  SymmetrizedSet sym;
  sym.relator_count = p.relators().size();
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const Word& r = p.relators()[i];
    Word inv = invert(r);
    for (int pass = 0; pass < 2; ++pass) {
      const Word& base = pass == 0 ? r : inv;
      for (std::size_t s = 0; s < base.size(); ++s) {
        sym.occurrences.push_back({i, s, pass == 1, rotate(base, s)});
      }
    }
  }
  for (const Occurrence& o : sym.occurrences) sym.distinct_words.push_back(o.word);
  std::sort(sym.distinct_words.begin(), sym.distinct_words.end(), shortlex_less);
  sym.distinct_words.erase(std::unique(sym.distinct_words.begin(), sym.distinct_words.end()),
                           sym.distinct_words.end());
  return sym;
}

std::vector<Piece> max_pieces(const SymmetrizedSet& sym) {
  // The longest common prefix of a word with any other word of a set is
  // attained at one of its neighbours in lexicographic order.
  std::vector<Word> lex = sym.distinct_words;
  std::sort(lex.begin(), lex.end());
  std::unordered_map<Word, std::size_t, WordHash> best;
  for (std::size_t i = 0; i < lex.size(); ++i) {
    std::size_t l = 0;
    if (i > 0) l = std::max(l, common_prefix_length(lex[i], lex[i - 1]));
    if (i + 1 < lex.size()) l = std::max(l, common_prefix_length(lex[i], lex[i + 1]));
    best[lex[i]] = l;
  }
  std::vector<Piece> out(sym.relator_count);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].relator = i;
  for (const Occurrence& o : sym.occurrences) {
    std::size_t l = best.at(o.word);
    if (l > out[o.relator].word.size()) out[o.relator].word = o.word.subword(0, l);
  }
  return out;
}

bool is_proper_power(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && rotate(w, p) == w) return true;
  }
  return false;
}

CancellationReport check_small_cancellation(const Presentation& p, const Rational& lambda) {
  CancellationReport report;
  report.lambda = lambda;
  report.worst_ratio = 0;
  std::vector<Piece> pieces = max_pieces(symmetrize(p));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Word& r = p.relators()[i];
    std::size_t len = pieces[i].word.size();
    report.max_piece_lengths.push_back(len);
    report.proper_power_flags.push_back(is_proper_power(r));
    // |piece| < lambda |r|, cross-multiplied.
    if (!(Rational(len) < lambda * Rational(r.size()))) report.passes = false;
    Rational ratio(len, r.size());
    ratio.canonicalize();
    if (!report.worst || ratio > report.worst_ratio) {
      report.worst = pieces[i];
      report.worst_ratio = ratio;
    }
  }
  return report;
}

}  // namespace grouprho
