#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

namespace qg {

using Gen = std::uint8_t;

// A word is a sequence of generator indices stored as bytes; the empty word is 1.
using Word = std::string;

inline Gen gen_at(const Word& w, std::size_t i) { return static_cast<Gen>(w[i]); }

inline Word make_word(std::initializer_list<int> gens) {
  Word w;
  for (int g : gens) w.push_back(static_cast<char>(g));
  return w;
}

inline Word letter(int g) { return Word(1, static_cast<char>(g)); }

}  // namespace qg
