#pragma once

// Conversions between library values and the oracle's string representation.

#include <string>

#include "oracle.hpp"
#include "superlie/poly.hpp"
#include "superlie/words.hpp"

namespace bridge {

inline superlie::AlphabetPtr alphabet(const oracle::Alpha& A) {
  std::vector<superlie::Alphabet::Entry> entries;
  for (char c : A.letters) {
    entries.push_back({std::string(1, c), A.is_odd(c) ? superlie::Parity::Odd : superlie::Parity::Even});
  }
  return superlie::Alphabet::make(std::move(entries));
}

inline std::string str(const superlie::Word& w) {
  std::string s;
  for (auto l : w.letters()) s += (*w.alphabet())[l].name;
  return s;
}

inline superlie::Word word(const superlie::AlphabetPtr& T, const std::string& s) {
  std::vector<superlie::Letter> letters;
  for (char c : s) letters.push_back(T->rank_of(std::string(1, c)));
  return superlie::Word(T, std::move(letters));
}

inline oracle::P poly(const superlie::Poly& p) {
  oracle::P out;
  for (const auto& [w, c] : p.terms()) out[str(w)] = c;
  return out;
}

inline superlie::Poly poly(const superlie::AlphabetPtr& T, const oracle::P& p) {
  superlie::Poly out(T);
  for (const auto& [w, c] : p) out.add_term(word(T, w), c);
  return out;
}

}  // namespace bridge
