#pragma once

#include <string>
#include <vector>

#include "grouprho/presentation.hpp"
#include "grouprho/words.hpp"

namespace grouprho::testing {

inline Presentation make(const std::string& names, const std::vector<std::string>& relators) {
  Alphabet a(names);
  std::vector<Word> rels;
  for (const auto& r : relators) rels.push_back(parse_word(r, a));
  return Presentation(a, rels);
}

inline Word w(const std::string& text, const std::string& names = "ab") {
  return parse_word(text, Alphabet(names));
}

inline std::string s(const Word& word, const std::string& names = "ab") {
  return to_string(word, Alphabet(names));
}

}  // namespace grouprho::testing
